#pragma once

// Finite-window estimators that never touch the exact Eberlein/Poisson algebra.
// They are the ground truth the exact modules are checked against.

#include <vector>

#include "homometry/measure.hpp"

namespace homometry {

/// Estimate of the autocorrelation near one probe position.
struct WindowEstimate {
  Rat position;
  /// Atomic weight at the probe: (1/2R) * sum of w_x conj(w_y) over window pairs with x - y = z.
  CAmp atom;
  /// Density of the Lebesgue cross terms at the probe, also divided by 2R.
  CAmp density;
};

/// gamma_R = (m|_[-R,R] * reflect_conjugate(m|_[-R,R])) / (2R) evaluated at each probe.
/// Boundary atoms at +-R are included.
std::vector<WindowEstimate> window_autocorrelation(const MixedMeasure& m, const Rat& radius,
                                                   const std::vector<Rat>& probes, const Options& opt = {});

/// Re (1/2R) * integral over [-R, R] of e^{-2 pi i k z} d gamma(z).
double bragg_intensity(const MixedMeasure& gamma, const Rat& k, const Rat& radius, const Options& opt = {});

/// Largest deviations between the window estimators and the exact algebra for one measure.
struct OracleReport {
  double autocorrelation_error = 0.0;
  double bragg_error = 0.0;
  std::size_t probes = 0;
  std::size_t frequencies = 0;
};

/// Compares window_autocorrelation against autocorrelate(m) (atoms and Lebesgue density) at
/// all probes of a half-step refinement of the relevant lattice in [-extent, extent], and
/// bragg_intensity(autocorrelate(m)) against diffraction(m) on the same kind of grid.
OracleReport compare_with_exact(const MixedMeasure& m, const Rat& radius, const Rat& extent = Rat(5),
                                const Options& opt = {});

}  // namespace homometry
