#pragma once

// The period-doubling-derived point sets
//
//   Lambda  = union_{n>=0} (2*4^n Z + (4^n - 1)),
//   Delta   = Lambda u (-Lambda) = 2Z  (disjoint u)  Delta_1 u Delta_2 u ...,
//   Delta_n = (2*4^n Z + (4^n - 1)) u (2*4^n Z + (1 - 4^n)),
//
// together with the formal Fourier series of the comb on Delta,
//
//   1/2 delta_{Z/2} + sum_{n>=1} cos(2 pi (4^n - 1) x) / (4 + eps)^n  delta_{Z/(2*4^n)},
//
// which is a translation-bounded measure for eps > 0 and only a tempered
// distribution for eps = 0.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homometry/measure.hpp"

namespace homometry {

class NonConvergent : public Error {
 public:
  using Error::Error;
};

enum class PdSet { Lambda, Delta };

std::string_view to_string(PdSet s);
/// Accepts "delta"/"Delta" and "lambda"/"Lambda"; nullopt for anything else.
std::optional<PdSet> parse_pd_set(std::string_view name);

/// k in Delta.
bool pd_member(std::int64_t k);
/// k in Lambda.
bool pd_lambda_member(std::int64_t k);
/// 0 if k is even, n if k lies in Delta_n, nullopt if k is not in Delta.
std::optional<int> pd_level(std::int64_t k);

/// Members of Delta in [lo, hi], ascending.
std::vector<std::int64_t> pd_enumerate(std::int64_t lo, std::int64_t hi);
/// Members of Delta_n in [lo, hi], ascending. Requires n >= 1.
std::vector<std::int64_t> pd_delta_n(int n, std::int64_t lo, std::int64_t hi);

/// Comb on spacing*Z whose atom at x carries amplitude * cos(2 pi frequency x).
struct ModulatedComb {
  Rat spacing;
  Rat frequency;
  double amplitude = 0.0;

  double weight_at_index(std::int64_t m) const;
  /// The same comb as an exact periodic pattern.
  PeriodicComb expand() const;
};

/// head + term_scale * sum_{n>=1} term(n), with term(n) produced by `rule` at the series damping.
struct FormalCombSeries {
  struct Rule {
    std::string name;
    std::string formula;
    std::function<ModulatedComb(int n, double damping)> term;
  };

  MixedMeasure head;
  CAmp term_scale{1.0};
  double damping = 0.0;
  Rule rule;
  /// Set for objects outside the backward-transformable scheme.
  bool experimental = false;

  ModulatedComb term(int n) const { return rule.term(n, damping); }
  /// True when the series is known to define a measure (damping > 0).
  bool is_measure() const { return damping > 0.0; }
};

/// The formal transform of the comb on Delta, regularized by eps >= 0.
FormalCombSeries pd_formal_fourier(double eps = 0.0);

/// Same series with eps replaced; rule, head and scale are kept.
FormalCombSeries with_damping(FormalCombSeries s, double eps);

/// head + term_scale * (term 1 + ... + term N), collisions summed. N <= 8 always fits the default guard.
MixedMeasure series_partial_sum(const FormalCombSeries& s, int n_terms, const Options& opt = {});

/// Sum of |weights| of atoms in [a, b] plus |lebesgue| * (b - a).
double total_variation(const MixedMeasure& m, const Rat& a, const Rat& b, const Options& opt = {});

/// Integral of the unnormalized Gaussian exp(-(x - center)^2 / (2 sigma^2)) against m.
/// Atoms are taken within |x - center| <= 12 sigma.
CAmp pair_with_gaussian(const MixedMeasure& m, double center, double sigma);

/// Pairing of the series with the same Gaussian.
///
/// Every term is a sum over at most 24 sigma / spacing atoms. Terms stop once the Poisson-dual
/// bound (1/h) * amplitude * sum_j |g^(j/h - f)| on the whole term falls below 1e-15; the bound
/// decays like exp(-2 pi^2 sigma^2 (4^n - 1)^2), so the tail beyond the cutoff is far smaller
/// still. Throws NonConvergent if that has not happened before the lattice leaves 64-bit range.
CAmp pair_with_gaussian(const FormalCombSeries& s, double center, double sigma);

}  // namespace homometry
