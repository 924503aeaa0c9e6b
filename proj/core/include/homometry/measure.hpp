#pragma once

// Exact data model for measures on the real line of the form
//
//   c * lambda  +  sum of lattice-periodic Dirac combs  +  finitely many atoms,
//
// with rational positions and complex floating weights.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "homometry/rational.hpp"

namespace homometry {

/// Complex amplitude / weight. Comparisons go through Options::tol.
using CAmp = std::complex<double>;

/// Numerical tolerance and resource guard shared by every operation.
struct Options {
  double tol = 1e-9;
  /// Largest number of atoms per period a comb refinement may need.
  std::size_t guard = 1'000'000;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RefinementTooLarge : public Error {
 public:
  using Error::Error;
};

/// Dirac comb on spacing*Z whose weights repeat with period N = weights.size().
/// Weight j sits at spacing*(j + m*N) for every integer m.
struct PeriodicComb {
  Rat spacing{1};
  std::vector<CAmp> weights;

  std::size_t size() const { return weights.size(); }
  /// Full period spacing * N.
  Rat period() const { return spacing * Rat(static_cast<std::int64_t>(weights.size())); }
  /// Weight at lattice index k (position spacing*k), k any integer.
  CAmp at_index(std::int64_t k) const;
  /// Weight at an arbitrary rational position (0 off the lattice).
  CAmp at(const Rat& x) const;
};

struct Atom {
  Rat position;
  CAmp weight;
};

/// Finitely many atoms, strictly increasing positions, no zero weights once canonical.
using FiniteComb = std::vector<Atom>;

struct MixedMeasure {
  CAmp lebesgue{0.0, 0.0};
  std::vector<PeriodicComb> combs;
  FiniteComb finite;

  bool is_zero() const { return lebesgue == CAmp{} && combs.empty() && finite.empty(); }
  bool has_finite_part() const { return !finite.empty(); }
  /// Total atomic weight at x (combs plus finite part).
  CAmp weight_at(const Rat& x) const;
};

// Constructors for the building blocks. All results are canonical.
MixedMeasure zero_measure();
MixedMeasure lebesgue(CAmp c = 1.0);
MixedMeasure dirac(const Rat& position, CAmp weight = 1.0);
/// Comb with the given per-period pattern on spacing*Z.
MixedMeasure comb(const Rat& spacing, std::vector<CAmp> weights, const Options& opt = {});
/// Uniform unit comb delta_{spacing Z}.
MixedMeasure lattice_comb(const Rat& spacing = Rat(1));

/// Brings m into canonical form: minimal-period combs on the coarsest lattice,
/// all combs merged into a common refinement, sorted finite atoms, weights with
/// |w| <= tol dropped. Throws RefinementTooLarge when a merge exceeds opt.guard.
MixedMeasure canonicalize(MixedMeasure m, const Options& opt = {});

MixedMeasure add(const MixedMeasure& a, const MixedMeasure& b, const Options& opt = {});
MixedMeasure scale(const MixedMeasure& m, CAmp c, const Options& opt = {});
/// x -> conj(m(-x)).
MixedMeasure reflect_conjugate(const MixedMeasure& m, const Options& opt = {});
/// x -> m(-x), no conjugation.
MixedMeasure reflect(const MixedMeasure& m, const Options& opt = {});
MixedMeasure conjugate(const MixedMeasure& m, const Options& opt = {});
/// The measure without its finite part.
MixedMeasure strip_finite(MixedMeasure m);

struct Restriction {
  FiniteComb atoms;
  CAmp lebesgue_mass;
};

/// Atoms in the closed interval [a, b] (finite part merged in) and lebesgue*(b-a).
Restriction restrict(const MixedMeasure& m, const Rat& a, const Rat& b, const Options& opt = {});

bool is_real(const MixedMeasure& m, const Options& opt = {});
bool is_positive(const MixedMeasure& m, const Options& opt = {});
/// m(-x) == m(x).
bool is_inversion_symmetric(const MixedMeasure& m, const Options& opt = {});
bool is_pure_point(const MixedMeasure& m, const Options& opt = {});

/// Canonical equality under the weight tolerance. Both inputs are canonicalized first.
bool approx_equal(const MixedMeasure& a, const MixedMeasure& b, const Options& opt = {});

/// Coarsest lattice b*Z that contains every atom of m (combs and finite part).
/// Returns 1 when m has no atoms away from the origin.
Rat support_lattice(const MixedMeasure& m);

std::string describe(const MixedMeasure& m);

inline bool approx_equal(CAmp a, CAmp b, double tol) { return std::abs(a - b) <= tol; }

MixedMeasure operator+(const MixedMeasure& a, const MixedMeasure& b);
MixedMeasure operator-(const MixedMeasure& a, const MixedMeasure& b);
MixedMeasure operator-(const MixedMeasure& m);
MixedMeasure operator*(CAmp c, const MixedMeasure& m);
bool operator==(const MixedMeasure& a, const MixedMeasure& b);

}  // namespace homometry
