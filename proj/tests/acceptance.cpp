// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include "homometry/homometry.hpp"
#include "random_measures.hpp"

using namespace homometry;
using homometry::testing::Gen;

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const char* title, double time_limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.note << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0 && secs >= time_limit_s) {
    c.ok = false;
    c.note << " runtime " << secs << " s over the " << time_limit_s << " s limit";
  }
  std::printf("criterion %2d %-4s %-44s %.3f s%s%s\n", id, c.ok ? "PASS" : "FAIL", title, secs,
              c.note.str().empty() ? "" : "  ", c.note.str().c_str());
  if (!c.ok) ++failures;
}

// The eight cells with exact weights on {0, 1/4, 1/2, 3/4} + Z.
struct Cell {
  Rat t;
  int e;
  double w[4];
};
const Cell kTable[] = {
    {Rat(0), 1, {1, 0, 0, 0}},          {Rat(0), -1, {0.5, 0.5, -0.5, 0.5}},
    {Rat(1, 4), 1, {0.5, -0.5, 0.5, 0.5}}, {Rat(1, 4), -1, {0, 0, 0, 1}},
    {Rat(1, 2), 1, {0, 0, 1, 0}},       {Rat(1, 2), -1, {-0.5, 0.5, 0.5, 0.5}},
    {Rat(3, 4), 1, {0.5, 0.5, 0.5, -0.5}}, {Rat(3, 4), -1, {0, 1, 0, 0}},
};

std::int64_t floor_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// Residue levels of k straight from the definitions: 0 for 2Z, n for Delta_n.
std::set<int> brute_levels(std::int64_t k) {
  std::set<int> out;
  if (floor_mod(k, 2) == 0) out.insert(0);
  std::int64_t p = 4;
  for (int n = 1; n <= 10; ++n, p *= 4) {
    if (floor_mod(k - (p - 1), 2 * p) == 0 || floor_mod(k - (1 - p), 2 * p) == 0) out.insert(n);
  }
  return out;
}

std::vector<MixedMeasure> example_measures() {
  std::vector<MixedMeasure> out;
  for (const auto& c : kTable) out.push_back(table_omega_alpha(Turn(c.t), c.e));
  const CAmp u = std::polar(1.0, 2.0 * kPi / 7.0);
  for (const auto& m : {lebesgue(), -lebesgue(), lebesgue(u), lebesgue(2.0) - lattice_comb(),
                        lattice_comb() - lebesgue(CAmp(1, 1)), lattice_comb() - lebesgue(), lattice_comb()}) {
    out.push_back(m);
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "golden table of the eight 4-periodic cells", 1.0, [](Check& c) {
    for (const auto& cell : kTable) {
      const MixedMeasure m = table_omega_alpha(Turn(cell.t), cell.e);
      for (int k = 0; k < 4; ++k) {
        for (int shift : {0, -4, 8}) {
          const CAmp got = m.weight_at(Rat(k + shift, 4));
          c.require(std::abs(got - CAmp(cell.w[k])) <= 1e-9, "cell " + cell.t.str() + " weight mismatch");
        }
      }
      c.require(diffraction(m) == lattice_comb(), "cell " + cell.t.str() + " diffraction is not delta_Z");
    }
  });

  criterion(2, "solution-class spot checks", 0, [](Check& c) {
    const MixedMeasure z = lattice_comb(), d0 = dirac(Rat(0));
    const CAmp u = std::polar(1.0, 2.0 * kPi / 7.0);
    c.require(diffraction(lebesgue()) == d0, "lambda");
    c.require(diffraction(-lebesgue()) == d0, "-lambda");
    c.require(diffraction(lebesgue(u)) == d0, "u lambda");
    c.require(diffraction(lebesgue(2.0) - z) == z, "2 lambda - delta_Z");
    c.require(diffraction(z - lebesgue(CAmp(1, 1))) == z, "delta_Z - (1+i) lambda");
    c.require(diffraction(z - lebesgue()) == z - d0, "delta_Z - lambda");
  });

  criterion(3, "Poisson summation", 0, [](Check& c) {
    const MixedMeasure z = lattice_comb(), d0 = dirac(Rat(0));
    c.require(fourier(z) == z, "F(delta_Z)");
    c.require(fourier(lebesgue()) == d0, "F(lambda)");
    c.require(inverse_fourier(2.0 * d0 - z) == lebesgue(2.0) - z, "F^-1(2 delta_0 - delta_Z)");
  });

  criterion(4, "round trips on 200 random combs", 0, [](Check& c) {
    Gen g(20240401);
    for (int i = 0; i < 200; ++i) {
      const MixedMeasure m = g.periodic_comb(16, 8);
      c.require(inverse_fourier(fourier(m)) == m, "inverse_fourier(fourier(m)) != m for " + describe(m));
      // Solve needs an inversion-symmetric diffraction, which real structures provide.
      const MixedMeasure r = g.periodic_comb(16, 8, true);
      const MixedMeasure d = diffraction(r);
      const ResidueClasses phases = recover_residue_phases(fourier(r), support_lattice(d));
      c.require(diffraction(solve(d, phases).measure()) == d, "solve round trip for " + describe(r));
      if (m.combs.empty()) continue;
      const PeriodicComb& p = m.combs.front();
      const MixedMeasure w = fourier(m);
      const Rat dual = Rat(1) / p.period();
      double lhs = 0.0, rhs = 0.0;
      for (std::size_t k = 0; k < p.size(); ++k) lhs += std::norm(w.weight_at(dual * Rat(static_cast<std::int64_t>(k))));
      for (const auto& x : p.weights) rhs += std::norm(x);
      rhs /= static_cast<double>(p.size()) * p.spacing.to_double() * p.spacing.to_double();
      c.require(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, rhs), "Parseval for " + describe(m));
    }
  });

  criterion(5, "window oracle against the exact algebra", 10.0, [](Check& c) {
    double worst = 0.0;
    for (const auto& m : example_measures()) {
      const OracleReport r = compare_with_exact(m, Rat(1000));
      worst = std::max({worst, r.autocorrelation_error, r.bragg_error});
      c.require(r.probes > 0 && r.frequencies > 0, "no probes for " + describe(m));
      c.require(r.autocorrelation_error <= 5e-3, "autocorrelation error for " + describe(m));
      c.require(r.bragg_error <= 5e-3, "Bragg error for " + describe(m));
    }
    c.note << "max error " << worst;
  });

  criterion(6, "finite-part nullity and phase invariance", 0, [](Check& c) {
    Gen g(6006);
    for (int i = 0; i < 50; ++i) {
      const MixedMeasure m = g.mixed(false);
      const MixedMeasure d = diffraction(m);
      c.require(diffraction(m + g.finite_atoms(25)) == d, "finite atoms changed " + describe(m));
      c.require(diffraction(g.unimodular() * m) == d, "unimodular scalar changed " + describe(m));
    }
  });

  criterion(7, "period-doubling set against residue enumeration", 5.0, [](Check& c) {
    for (std::int64_t k = -10000; k <= 10000; ++k) {
      const std::set<int> levels = brute_levels(k);
      c.require(levels.size() <= 1, "overlapping pieces at " + std::to_string(k));
      c.require(pd_member(k) == !levels.empty(), "membership at " + std::to_string(k));
      c.require(pd_member(k) == pd_member(-k), "symmetry at " + std::to_string(k));
      const auto level = pd_level(k);
      c.require(levels.empty() ? !level.has_value() : level == *levels.begin(), "level at " + std::to_string(k));
    }
  });

  criterion(8, "non-measure certificate at eps = 0", 0, [](Check& c) {
    // Brute-force values before fixing the constant: 0.927, 1.187, 1.411, 1.626, 1.839, 2.051,
    // 2.263, 2.476 for N = 1..8. The increments settle near 0.212, so 0.25 * N holds up to N = 8.
    const FormalCombSeries s = pd_formal_fourier(0.0);
    double prev = 0.0;
    for (int n = 1; n <= 8; ++n) {
      const double tv = total_variation(series_partial_sum(s, n), Rat(0), Rat(1, 4));
      if (n > 1) c.require(tv > prev, "not increasing at N = " + std::to_string(n));
      if (n >= 2) c.require(tv > 0.25 * n, "below 0.25 N at N = " + std::to_string(n));
      prev = tv;
    }
    c.note << "TV(S_8) = " << prev;
  });

  criterion(9, "measure certificate for eps in {1, 1/2, 1/4}", 0, [](Check& c) {
    for (const double eps : {1.0, 0.5, 0.25}) {
      const FormalCombSeries s = pd_formal_fourier(eps);
      double prev = 0.0;
      double bound = 1.5;  // three head atoms of weight 1/2 in [0, 1]
      for (int n = 0; n <= 8; ++n) {
        if (n > 0) bound += (2.0 * std::pow(4.0, n) + 1.0) / std::pow(4.0 + eps, n);
        const double tv = total_variation(series_partial_sum(s, n), Rat(0), Rat(1));
        c.require(tv <= bound + 1e-12, "geometric bound at eps " + std::to_string(eps));
        if (n > 0) {
          c.require(std::abs(tv - prev) < 3.0 * std::pow(4.0 / (4.0 + eps), n),
                    "Cauchy step at eps " + std::to_string(eps) + ", N = " + std::to_string(n));
        }
        prev = tv;
      }
    }
  });

  criterion(10, "regularization convergence and linearity", 0, [](Check& c) {
    const FormalCombSeries rho0 = pd_formal_fourier(0.0);
    const Solution omega = solve(lattice_comb(), SetIndicator{PdSet::Delta, Turn(Rat(0)), Turn(Rat(1, 2))});
    const double comb_pairing = pair_with_gaussian(lattice_comb(), 0.0, 1.0).real();
    double prev = 0.0, last_step = 0.0;
    for (int j = 0; j <= 20; ++j) {
      const double eps = std::ldexp(1.0, -j);
      const double v = pair_with_gaussian(with_damping(rho0, eps), 0.0, 1.0).real();
      if (j > 0) last_step = std::abs(v - prev);
      prev = v;
      const double w = pair_with_gaussian(with_damping(omega.series(), eps), 0.0, 1.0).real();
      c.require(std::abs(w - (2.0 * v - comb_pairing)) <= 1e-12, "linearity at j = " + std::to_string(j));
    }
    c.require(last_step < 1e-6, "Cauchy step at j = 20 is " + std::to_string(last_step));
    c.note << "|step_20| = " << last_step;
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
