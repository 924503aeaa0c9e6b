#include "homometry/oracle.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "homometry/eberlein.hpp"
#include "homometry/fourier.hpp"

namespace homometry {

namespace {

// e^{-2 pi i t} for rational t, reduced mod 1 before going to floating point.
CAmp unit_phase(const Rat& t) {
  const Rat frac = mod(t, Rat(1));
  const double angle = -2.0 * std::numbers::pi * frac.to_double();
  return {std::cos(angle), std::sin(angle)};
}

std::vector<Rat> grid(const Rat& step, const Rat& extent) {
  std::vector<Rat> out;
  const std::int64_t n = (extent / step).floor();
  for (std::int64_t k = -n; k <= n; ++k) out.push_back(step * Rat(k));
  return out;
}

}  // namespace

std::vector<WindowEstimate> window_autocorrelation(const MixedMeasure& m, const Rat& radius,
                                                   const std::vector<Rat>& probes, const Options& opt) {
  if (!(radius > Rat(0))) throw std::invalid_argument("window_autocorrelation: radius must be positive");
  const Restriction window = restrict(m, -radius, radius, opt);
  std::map<Rat, CAmp> atoms;
  for (const auto& a : window.atoms) atoms.emplace(a.position, a.weight);

  const double two_r = 2.0 * radius.to_double();
  const CAmp c = m.lebesgue;
  std::vector<WindowEstimate> out;
  out.reserve(probes.size());
  for (const Rat& z : probes) {
    CAmp pairs{};
    for (const auto& [x, wx] : atoms) {
      if (auto it = atoms.find(x - z); it != atoms.end()) pairs += wx * std::conj(it->second);
    }

    CAmp density{};
    if (c != CAmp{}) {
      const double overlap = std::max(0.0, two_r - std::abs(z.to_double()));
      density += c * std::conj(c) * overlap;
      CAmp left{};   // c lambda_R against the reflected atoms
      CAmp right{};  // atoms against the reflected c lambda_R
      for (const auto& [x, w] : atoms) {
        const Rat shifted_plus = z + x;
        if (-radius <= shifted_plus && shifted_plus <= radius) left += std::conj(w);
        const Rat shifted_minus = z - x;
        if (-radius <= shifted_minus && shifted_minus <= radius) right += w;
      }
      density += c * left + std::conj(c) * right;
    }
    out.push_back({z, pairs / two_r, density / two_r});
  }
  return out;
}

double bragg_intensity(const MixedMeasure& gamma, const Rat& k, const Rat& radius, const Options& opt) {
  if (!(radius > Rat(0))) throw std::invalid_argument("bragg_intensity: radius must be positive");
  const Restriction window = restrict(gamma, -radius, radius, opt);
  CAmp sum{};
  for (const auto& a : window.atoms) sum += a.weight * unit_phase(k * a.position);
  const double r = radius.to_double();
  if (k.is_zero()) {
    sum += gamma.lebesgue * (2.0 * r);
  } else {
    const double kd = k.to_double();
    sum += gamma.lebesgue * std::sin(2.0 * std::numbers::pi * kd * r) / (std::numbers::pi * kd);
  }
  return (sum / (2.0 * r)).real();
}

OracleReport compare_with_exact(const MixedMeasure& m, const Rat& radius, const Rat& extent, const Options& opt) {
  const MixedMeasure gamma = autocorrelate(m, opt);
  const MixedMeasure spectrum = diffraction(m, opt);
  OracleReport report;

  const Rat probe_step = gcd(support_lattice(gamma), support_lattice(m)) / Rat(2);
  const auto probes = grid(probe_step, extent);
  for (const auto& est : window_autocorrelation(m, radius, probes, opt)) {
    const double atom_err = std::abs(est.atom - gamma.weight_at(est.position));
    const double density_err = std::abs(est.density - gamma.lebesgue);
    report.autocorrelation_error = std::max({report.autocorrelation_error, atom_err, density_err});
  }
  report.probes = probes.size();

  const auto freqs = grid(support_lattice(spectrum) / Rat(2), extent);
  for (const Rat& k : freqs) {
    const double exact = spectrum.weight_at(k).real();
    report.bragg_error = std::max(report.bragg_error, std::abs(bragg_intensity(gamma, k, radius, opt) - exact));
  }
  report.frequencies = freqs.size();
  return report;
}

}  // namespace homometry
