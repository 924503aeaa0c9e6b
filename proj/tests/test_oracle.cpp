#include <doctest.h>

#include "homometry/eberlein.hpp"
#include "homometry/fourier.hpp"
#include "homometry/oracle.hpp"
#include "random_measures.hpp"

using namespace homometry;
using homometry::testing::Gen;

TEST_CASE("window autocorrelation of the integer comb") {
  const auto est = window_autocorrelation(lattice_comb(), Rat(100), {Rat(0), Rat(1), Rat(1, 2)});
  REQUIRE(est.size() == 3);
  CHECK(est[0].atom.real() == doctest::Approx(201.0 / 200.0));
  CHECK(est[1].atom.real() == doctest::Approx(1.0));
  CHECK(est[2].atom == CAmp(0.0));
  CHECK(est[0].density == CAmp(0.0));
}

TEST_CASE("window autocorrelation of Lebesgue measure") {
  const auto est = window_autocorrelation(lebesgue(), Rat(100), {Rat(0), Rat(3)});
  CHECK(est[0].atom == CAmp(0.0));
  CHECK(est[0].density.real() == doctest::Approx(1.0));
  CHECK(std::abs(est[1].density.real() - 1.0) <= 3.0 / 200.0 + 1e-12);
}

TEST_CASE("Bragg intensities") {
  CHECK(bragg_intensity(lattice_comb(), Rat(0), Rat(100)) == doctest::Approx(201.0 / 200.0));
  CHECK(std::abs(bragg_intensity(lattice_comb(), Rat(1, 2), Rat(100))) == doctest::Approx(1.0 / 200.0));
  CHECK(bragg_intensity(lattice_comb() - lebesgue(), Rat(0), Rat(100)) == doctest::Approx(1.0 / 200.0));
  CHECK(std::abs(bragg_intensity(lebesgue(), Rat(1, 3), Rat(100))) < 1.0 / 100.0);
}

TEST_CASE("oracle agrees with the exact algebra on the worked examples") {
  const CAmp u = std::polar(1.0, 2.0 * 3.141592653589793 / 7.0);
  const std::vector<MixedMeasure> examples = {
      lebesgue(),
      -lebesgue(),
      lebesgue(u),
      lebesgue(2.0) - lattice_comb(),
      lattice_comb() - lebesgue(CAmp(1.0, 1.0)),
      lattice_comb() - lebesgue(),
      comb(Rat(1, 4), {0.5, 0.5, -0.5, 0.5}),
  };
  for (const Rat r : {Rat(100), Rat(1000)}) {
    for (const auto& m : examples) {
      const OracleReport rep = compare_with_exact(m, r);
      CAPTURE(describe(m));
      CHECK(rep.probes > 0);
      CHECK(rep.frequencies > 0);
      CHECK(rep.autocorrelation_error <= 5.0 / r.to_double());
      CHECK(rep.bragg_error <= 5.0 / r.to_double());
    }
  }
}

TEST_CASE("property: oracle agreement on random combs within the boundary bound") {
  // A window of half-width R sees floor((2R - |z|) / L) full periods of the pairs at lag z, so the
  // estimate misses at most |z| |gamma(z)| + L |gamma(z)| + S, with S the squared weight mass of
  // one period and |gamma(z)| <= S / L. The Bragg estimate misses at most one period of |gamma|
  // at each end of the window.
  Gen g(3030);
  for (int i = 0; i < 40; ++i) {
    MixedMeasure m = g.periodic_comb(8, 4);
    if (m.combs.empty()) continue;
    double largest = 0.0;
    for (const auto& w : m.combs.front().weights) largest = std::max(largest, std::abs(w));
    m = (1.0 / largest) * m;
    const PeriodicComb& c = m.combs.front();
    const double period = c.period().to_double();
    double mass = 0.0;
    for (const auto& w : c.weights) mass += std::norm(w);
    const Rat radius(1000);
    const double r = radius.to_double();
    const double auto_bound = ((5.0 + period) * mass / period + mass) / (2.0 * r);

    const MixedMeasure gamma = autocorrelate(m);
    const Rat gamma_period = gamma.combs.empty() ? Rat(1) : gamma.combs.front().period();
    const double bragg_bound = total_variation(gamma, Rat(0), gamma_period) / r;

    const OracleReport rep = compare_with_exact(m, radius);
    CAPTURE(describe(m));
    CHECK(rep.autocorrelation_error <= auto_bound + 1e-12);
    CHECK(rep.bragg_error <= bragg_bound + 1e-12);
  }
}
