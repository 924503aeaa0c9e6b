#include "homometry/fourier.hpp"

#include <cmath>
#include <numbers>

#include "homometry/eberlein.hpp"

namespace homometry {

namespace {

PeriodicComb transform_comb(const PeriodicComb& c, double sign) {
  const std::size_t n = c.size();
  const Rat period = c.period();
  const double norm = 1.0 / period.to_double();
  // Exact twiddles for every residue of m*k mod n.
  std::vector<CAmp> twiddle(n);
  for (std::size_t r = 0; r < n; ++r) {
    const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
    twiddle[r] = {std::cos(angle), std::sin(angle)};
  }
  PeriodicComb out{Rat(1) / period, std::vector<CAmp>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    CAmp sum{};
    for (std::size_t m = 0; m < n; ++m) sum += c.weights[m] * twiddle[(m * k) % n];
    out.weights[k] = sum * norm;
  }
  return out;
}

MixedMeasure transform(const MixedMeasure& m, double sign, const Options& opt) {
  MixedMeasure out;
  for (const auto& atom : m.finite) {
    if (!atom.position.is_zero()) {
      throw NonTransformableFinitePart("atom at " + atom.position.str() +
                                       " transforms to a modulated Lebesgue density; strip the finite part first");
    }
    out.lebesgue += atom.weight;
  }
  if (m.lebesgue != CAmp{}) out.finite.push_back({Rat(0), m.lebesgue});
  for (const auto& c : m.combs) out.combs.push_back(transform_comb(c, sign));
  return canonicalize(std::move(out), opt);
}

}  // namespace

MixedMeasure fourier(const MixedMeasure& m, const Options& opt) { return transform(m, -1.0, opt); }

MixedMeasure inverse_fourier(const MixedMeasure& m, const Options& opt) { return transform(m, +1.0, opt); }

MixedMeasure diffraction(const MixedMeasure& m, const Options& opt) {
  MixedMeasure out = fourier(autocorrelate(strip_finite(m), opt), opt);
  if (!is_pure_point(out, opt)) {
    throw std::logic_error("diffraction produced a Lebesgue component: " + describe(out));
  }
  return out;
}

bool verify_homometric(const MixedMeasure& a, const MixedMeasure& b, const Options& opt) {
  return approx_equal(diffraction(a, opt), diffraction(b, opt), opt);
}

}  // namespace homometry
