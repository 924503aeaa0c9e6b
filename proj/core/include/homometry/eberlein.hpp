#pragma once

#include "homometry/measure.hpp"

namespace homometry {

/// Average weight per unit length: lebesgue + sum over combs of (sum of weights) / period.
/// The finite part contributes nothing.
CAmp mean_density(const MixedMeasure& m);

/// Volume-averaged convolution m1 (*) reflect_conjugate(m2).
///
/// Rules: c1*lambda against c2*lambda gives c1*conj(c2)*lambda; lambda against a comb mu
/// gives conj(density(mu))*lambda and the mirrored case density(mu)*lambda; two combs with
/// common period L give the periodized cross-correlation scaled by 1/L. Finite parts vanish
/// under the averaging.
MixedMeasure eberlein(const MixedMeasure& m1, const MixedMeasure& m2, const Options& opt = {});

/// Autocorrelation gamma = m (*) m~.
MixedMeasure autocorrelate(const MixedMeasure& m, const Options& opt = {});

}  // namespace homometry
