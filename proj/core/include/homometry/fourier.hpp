#pragma once

#include "homometry/measure.hpp"

namespace homometry {

class NonTransformableFinitePart : public Error {
 public:
  using Error::Error;
};

/// Fourier transform with kernel e^{-2 pi i k x}.
///
/// c*lambda goes to c*delta_0 and c*delta_0 back to c*lambda. A comb on a*Z with N-periodic
/// weights w goes, by Poisson summation, to the comb on (1/(N a))*Z with weights
/// W_k = (1/(N a)) sum_m w_m e^{-2 pi i m k / N}. Finite atoms away from the origin have no
/// transform inside this class and raise NonTransformableFinitePart.
MixedMeasure fourier(const MixedMeasure& m, const Options& opt = {});

/// Same rules with kernel e^{+2 pi i k x}; inverse of fourier.
MixedMeasure inverse_fourier(const MixedMeasure& m, const Options& opt = {});

/// Diffraction measure: fourier(autocorrelate(m)). The finite part of m is dropped first,
/// it does not contribute to the autocorrelation.
MixedMeasure diffraction(const MixedMeasure& m, const Options& opt = {});

/// True iff both measures have the same diffraction.
bool verify_homometric(const MixedMeasure& a, const MixedMeasure& b, const Options& opt = {});

}  // namespace homometry
