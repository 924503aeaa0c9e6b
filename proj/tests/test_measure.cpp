#include <doctest.h>

#include "homometry/measure.hpp"
#include "random_measures.hpp"

using namespace homometry;
using homometry::testing::Gen;

namespace {

const CAmp I{0.0, 1.0};

MixedMeasure two_lambda_minus_comb() { return lebesgue(2.0) - lattice_comb(); }

}  // namespace

TEST_CASE("canonicalize reduces period and thins the lattice") {
  const MixedMeasure a = comb(Rat(1), {1.0, 1.0});
  REQUIRE(a.combs.size() == 1);
  CHECK(a.combs[0].spacing == Rat(1));
  CHECK(a.combs[0].weights.size() == 1);

  const MixedMeasure b = comb(Rat(1, 2), {1.0, 0.0});
  REQUIRE(b.combs.size() == 1);
  CHECK(b.combs[0].spacing == Rat(1));
  CHECK(b.combs[0].weights.size() == 1);
  CHECK(b == lattice_comb());

  MixedMeasure tiny;
  tiny.finite.push_back({Rat(0), 1e-12});
  CHECK(canonicalize(tiny).is_zero());
}

TEST_CASE("canonical combs merge into one common refinement") {
  const MixedMeasure m = lattice_comb(Rat(1, 2)) + lattice_comb(Rat(1, 3));
  REQUIRE(m.combs.size() == 1);
  CHECK(m.combs[0].spacing == Rat(1, 6));
  CHECK(m.weight_at(Rat(0)) == CAmp(2.0));
  CHECK(m.weight_at(Rat(1, 2)) == CAmp(1.0));
  CHECK(m.weight_at(Rat(1, 6)) == CAmp(0.0));
  CHECK(m.weight_at(Rat(-2, 3)) == CAmp(1.0));
}

TEST_CASE("finite atoms falling on a comb are kept separately") {
  const MixedMeasure m = lattice_comb() + dirac(Rat(0), -1.0) + dirac(Rat(1, 2), 2.0);
  CHECK(m.weight_at(Rat(0)) == CAmp(0.0));
  CHECK(m.weight_at(Rat(3)) == CAmp(1.0));
  CHECK(m.weight_at(Rat(1, 2)) == CAmp(2.0));
  CHECK(m.has_finite_part());
}

TEST_CASE("refinement guard") {
  Options opt;
  opt.guard = 100;
  CHECK_THROWS_AS(add(lattice_comb(Rat(1, 97)), lattice_comb(Rat(1, 89)), opt), RefinementTooLarge);
  CHECK_NOTHROW(add(lattice_comb(Rat(1, 7)), lattice_comb(Rat(1, 11)), opt));
}

TEST_CASE("add, scale and reflection examples") {
  const MixedMeasure m = two_lambda_minus_comb();
  CHECK(m.lebesgue == CAmp(2.0));
  REQUIRE(m.combs.size() == 1);
  CHECK(m.combs[0].spacing == Rat(1));
  CHECK(m.combs[0].weights == std::vector<CAmp>{-1.0});
  CHECK(m.finite.empty());

  const CAmp u = std::polar(1.0, 0.7);
  CHECK(reflect_conjugate(lebesgue(u)) == lebesgue(std::conj(u)));
  CHECK(scale(lattice_comb(), 0.0).is_zero());

  const MixedMeasure shifted = comb(Rat(1, 4), {0.0, I, 0.0, 0.0});
  CHECK(reflect_conjugate(shifted).weight_at(Rat(-1, 4)) == -I);
  CHECK(reflect(shifted).weight_at(Rat(-1, 4)) == I);
  CHECK(conjugate(shifted).weight_at(Rat(1, 4)) == -I);
}

TEST_CASE("restrict") {
  const Restriction r1 = restrict(lattice_comb(), Rat(0), Rat(5, 2));
  REQUIRE(r1.atoms.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(r1.atoms[i].position == Rat(static_cast<std::int64_t>(i)));
    CHECK(r1.atoms[i].weight == CAmp(1.0));
  }
  CHECK(r1.lebesgue_mass == CAmp(0.0));

  const Restriction r2 = restrict(lebesgue(), Rat(0), Rat(3));
  CHECK(r2.atoms.empty());
  CHECK(r2.lebesgue_mass == CAmp(3.0));

  const Restriction r3 = restrict(two_lambda_minus_comb(), Rat(-1), Rat(1));
  REQUIRE(r3.atoms.size() == 3);
  for (const auto& a : r3.atoms) CHECK(a.weight == CAmp(-1.0));
  CHECK(r3.atoms.front().position == Rat(-1));
  CHECK(r3.atoms.back().position == Rat(1));
  CHECK(r3.lebesgue_mass == CAmp(4.0));
}

TEST_CASE("restrict counts 2R+1 atoms of the integer comb") {
  for (std::int64_t r : {1, 2, 7, 50, 1000}) {
    CHECK(restrict(lattice_comb(), Rat(-r), Rat(r)).atoms.size() == static_cast<std::size_t>(2 * r + 1));
  }
}

TEST_CASE("structural predicates") {
  const MixedMeasure z = lattice_comb();
  CHECK(is_real(z));
  CHECK(is_positive(z));
  CHECK(is_inversion_symmetric(z));

  const MixedMeasure w = two_lambda_minus_comb();
  CHECK(is_real(w));
  CHECK_FALSE(is_positive(w));
  CHECK(is_inversion_symmetric(w));
  CHECK_FALSE(is_pure_point(w));

  const MixedMeasure c = lattice_comb() - lebesgue(CAmp(1.0, 1.0));
  CHECK_FALSE(is_real(c));
  CHECK_FALSE(is_positive(c));
  CHECK(is_inversion_symmetric(c));

  CHECK_FALSE(is_inversion_symmetric(dirac(Rat(1, 4))));
  CHECK(is_pure_point(dirac(Rat(1, 4)) + lattice_comb(Rat(1, 3))));
  CHECK(is_positive(lattice_comb() - dirac(Rat(0))));
  CHECK_FALSE(is_positive(lattice_comb() - dirac(Rat(0), 2.0)));
}

TEST_CASE("support lattice") {
  CHECK(support_lattice(lattice_comb(Rat(1, 2)) + dirac(Rat(1, 3))) == Rat(1, 6));
  CHECK(support_lattice(lebesgue()) == Rat(1));
  CHECK(support_lattice(comb(Rat(1, 4), {0.0, 1.0, 0.0, 0.0})) == Rat(1, 4));
  CHECK(support_lattice(comb(Rat(1, 4), {1.0, 0.0, 1.0, 0.0})) == Rat(1, 2));
}

TEST_CASE("property: canonicalize is idempotent") {
  Gen g(101);
  for (int i = 0; i < 200; ++i) {
    const MixedMeasure m = g.mixed();
    const MixedMeasure c = canonicalize(m);
    const MixedMeasure cc = canonicalize(c);
    CHECK(cc.lebesgue == c.lebesgue);
    REQUIRE(cc.combs.size() == c.combs.size());
    for (std::size_t j = 0; j < c.combs.size(); ++j) {
      CHECK(cc.combs[j].spacing == c.combs[j].spacing);
      CHECK(cc.combs[j].weights == c.combs[j].weights);
    }
    REQUIRE(cc.finite.size() == c.finite.size());
    for (std::size_t j = 0; j < c.finite.size(); ++j) {
      CHECK(cc.finite[j].position == c.finite[j].position);
      CHECK(cc.finite[j].weight == c.finite[j].weight);
    }
  }
}

TEST_CASE("property: add is commutative and associative") {
  Gen g(202);
  for (int i = 0; i < 100; ++i) {
    const MixedMeasure a = g.mixed(), b = g.mixed(), c = g.mixed();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("property: reflect_conjugate is an involution and distributes over add") {
  Gen g(303);
  for (int i = 0; i < 100; ++i) {
    const MixedMeasure a = g.mixed(), b = g.mixed();
    CHECK(reflect_conjugate(reflect_conjugate(a)) == a);
    CHECK(reflect_conjugate(a + b) == reflect_conjugate(a) + reflect_conjugate(b));
    // Pointwise definition: weight at x is conj of the weight at -x.
    for (std::int64_t k = -6; k <= 6; ++k) {
      const Rat x(k, 12);
      CHECK(std::abs(reflect_conjugate(a).weight_at(x) - std::conj(a.weight_at(-x))) < 1e-12);
    }
  }
}

TEST_CASE("describe is readable") {
  const std::string s = describe(two_lambda_minus_comb());
  CHECK(s.find("lambda") != std::string::npos);
}
