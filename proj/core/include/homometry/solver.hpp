#pragma once

// Reverse lower path of the Wiener diagram: a pure point diffraction
// sum_k I(k) delta_{kb} plus a rule for the phases of A(k) = sqrt(I(k)) e^{2 pi i t(k)}
// gives the transformed structure sum_k A(k) delta_{kb}, whose inverse transform is a
// structure with exactly that diffraction.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "homometry/limit_periodic.hpp"
#include "homometry/measure.hpp"

namespace homometry {

class NotADiffraction : public Error {
 public:
  using Error::Error;
};
class IntensityMismatch : public Error {
 public:
  using Error::Error;
};
class SymmetryViolation : public Error {
 public:
  using Error::Error;
};
class UnsupportedAssignment : public Error {
 public:
  using Error::Error;
};
class NotAMeasure : public Error {
 public:
  using Error::Error;
};

/// A phase measured in turns, A = e^{2 pi i t}. Rational turns are kept exact, so that
/// quarter turns give exact phases and t -> -t is exact negation.
class Turn {
 public:
  Turn() = default;
  Turn(Rat exact) : exact_(exact) {}  // NOLINT(google-explicit-constructor)
  explicit Turn(double approx);

  CAmp phase() const;
  Turn negated() const;
  double value() const { return exact_ ? exact_->to_double() : approx_; }
  const std::optional<Rat>& exact() const { return exact_; }
  std::string str() const;

 private:
  std::optional<Rat> exact_ = Rat(0);
  double approx_ = 0.0;
};

/// A(k) = u for every k. u carries the global phase of the complex solution class.
struct ConstantPhase {
  CAmp u{1.0};
};

/// A(k) = e^{2 pi i turns[k mod n]}.
struct ResidueClasses {
  int n = 1;
  std::vector<Turn> turns;
};

/// A(k) = e^{2 pi i default_turn} except at the listed k. Keys are given for k >= 0;
/// negative k follow by conjugation unless listed explicitly (then they must agree).
struct FiniteExceptions {
  Turn default_turn;
  std::map<std::int64_t, Turn> exceptions;
};

/// A(k) = e^{2 pi i inside} on the set, e^{2 pi i outside} off it.
struct SetIndicator {
  PdSet set = PdSet::Delta;
  Turn inside;
  Turn outside;
};

using PhaseAssignment = std::variant<ConstantPhase, ResidueClasses, FiniteExceptions, SetIndicator>;

/// Validated amplitudes A(k) at positions k * spacing.
struct Amplitudes {
  Rat spacing{1};
  /// Background values, index k mod periodic.size().
  std::vector<CAmp> periodic;
  /// Full value of A(k) wherever it differs from the background.
  std::map<std::int64_t, CAmp> exceptions;
  /// For set indicators: A(k) = indicator_value for k in the set (overrides the background).
  std::optional<std::pair<PdSet, CAmp>> indicator;
  std::vector<std::string> warnings;

  CAmp at(std::int64_t k) const;
  /// sum_k A(k) delta_{k spacing} as a measure (periodic comb plus finite deviations).
  /// Throws UnsupportedAssignment for indicator amplitudes.
  MixedMeasure to_measure(const Options& opt = {}) const;
};

/// Checks the diffraction axioms (real, positive, inversion symmetric, pure point) and the
/// phase rule (A(0) real positive and A(-k) = conj A(k), up to the global factor of a
/// ConstantPhase), then returns the amplitudes with |A(k)|^2 = I(k).
Amplitudes validate(const MixedMeasure& diffraction, const PhaseAssignment& phases, const Options& opt = {});

struct Solution {
  std::variant<MixedMeasure, FormalCombSeries> value;
  std::vector<std::string> warnings;

  bool is_measure() const { return std::holds_alternative<MixedMeasure>(value); }
  /// Throws NotAMeasure for series solutions.
  const MixedMeasure& measure() const;
  const FormalCombSeries& series() const;
};

/// A structure whose diffraction is the input. Periodic amplitudes plus an exceptional
/// amplitude at k = 0 stay inside the measure class (delta_0 -> lambda); exceptions at k != 0
/// raise UnsupportedAssignment. The indicator of Delta with turns (0, 1/2) yields the series
/// 2 * F(delta_Delta) - delta_Z.
Solution solve(const MixedMeasure& diffraction, const PhaseAssignment& phases, const Options& opt = {});

/// The 4-periodic member omega^e_alpha of the class of delta_Z for alpha = e^{2 pi i t_alpha},
/// e = +1 or -1: (1/4) sum_k (1 + 2 cos(2 pi (t_alpha + k/4)) + e cos(pi k)) delta_{k/4}.
MixedMeasure table_omega_alpha(const Turn& t_alpha, int e, const Options& opt = {});

/// Backward construction with the comb on Delta itself as the diffraction. Only defined for
/// Delta; the result is the formal series F(delta_Delta), flagged experimental.
Solution solve_experimental_delta_set(PdSet set, bool require_measure = false);

/// Reads a ResidueClasses rule off a periodic amplitude comb sampled at k * lattice.
/// Class 0 is pinned to turn 0 and the upper half of the classes mirrors the lower half, so the
/// result always satisfies the symmetry conditions.
ResidueClasses recover_residue_phases(const MixedMeasure& amplitudes, const Rat& lattice, const Options& opt = {});

}  // namespace homometry
