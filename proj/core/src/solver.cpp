#include "homometry/solver.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <set>

#include "homometry/fourier.hpp"

namespace homometry {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::int64_t floor_mod(std::int64_t k, std::int64_t n) {
  const std::int64_t r = k % n;
  return r < 0 ? r + n : r;
}

// Phase rule resolved against a concrete diffraction.
struct PhaseRule {
  std::vector<CAmp> background{CAmp{1.0}};
  std::map<std::int64_t, CAmp> exceptions;
  std::optional<std::pair<PdSet, CAmp>> indicator;
  CAmp global{1.0};

  CAmp at(std::int64_t k) const {
    if (auto it = exceptions.find(k); it != exceptions.end()) return it->second;
    if (indicator && indicator->first == PdSet::Delta && pd_member(k)) return indicator->second;
    return background[static_cast<std::size_t>(floor_mod(k, static_cast<std::int64_t>(background.size())))];
  }
};

bool is_sign(CAmp p, double tol) { return std::abs(p - std::conj(p)) <= tol; }

PhaseRule resolve(const PhaseAssignment& phases, const Options& opt) {
  return std::visit(
      overloaded{
          [&](const ConstantPhase& c) {
            if (std::abs(std::abs(c.u) - 1.0) > opt.tol) {
              throw IntensityMismatch("constant phase must be unimodular, |u| = " + std::to_string(std::abs(c.u)));
            }
            PhaseRule r;
            r.background = {c.u};
            r.global = c.u;
            return r;
          },
          [&](const ResidueClasses& rc) {
            if (rc.n < 1 || rc.turns.size() != static_cast<std::size_t>(rc.n)) {
              throw UnsupportedAssignment("residue assignment needs n >= 1 and exactly n turns");
            }
            PhaseRule r;
            r.background.clear();
            for (const auto& t : rc.turns) r.background.push_back(t.phase());
            for (int j = 0; j < rc.n; ++j) {
              const CAmp mirror = r.background[static_cast<std::size_t>((rc.n - j) % rc.n)];
              if (std::abs(mirror - std::conj(r.background[static_cast<std::size_t>(j)])) > opt.tol) {
                throw SymmetryViolation("class " + std::to_string(j) + " (turn " + rc.turns[j].str() +
                                        ") is not conjugate to class " + std::to_string((rc.n - j) % rc.n));
              }
            }
            return r;
          },
          [&](const FiniteExceptions& fe) {
            PhaseRule r;
            r.background = {fe.default_turn.phase()};
            if (!is_sign(r.background.front(), opt.tol)) {
              throw SymmetryViolation("default turn " + fe.default_turn.str() + " must be 0 or 1/2");
            }
            for (const auto& [k, t] : fe.exceptions) {
              const CAmp p = t.phase();
              r.exceptions[k] = p;
              if (auto it = fe.exceptions.find(-k); it != fe.exceptions.end()) {
                if (std::abs(it->second.phase() - std::conj(p)) > opt.tol) {
                  throw SymmetryViolation("exceptions at k = " + std::to_string(k) + " and " +
                                          std::to_string(-k) + " are not conjugate");
                }
              } else {
                r.exceptions[-k] = std::conj(p);
              }
            }
            return r;
          },
          [&](const SetIndicator& si) {
            if (si.set != PdSet::Delta) {
              throw UnsupportedAssignment("set indicators are only supported for the symmetric set delta");
            }
            PhaseRule r;
            r.background = {si.outside.phase()};
            r.indicator = std::pair{si.set, si.inside.phase()};
            if (!is_sign(r.background.front(), opt.tol) || !is_sign(r.indicator->second, opt.tol)) {
              throw SymmetryViolation("indicator turns must be 0 or 1/2");
            }
            return r;
          },
      },
      phases);
}

}  // namespace

Turn::Turn(double approx) : exact_(std::nullopt), approx_(approx) {
  if (!std::isfinite(approx)) throw std::invalid_argument("turn must be finite");
}

CAmp Turn::phase() const {
  if (exact_) {
    const Rat frac = mod(*exact_, Rat(1));
    if ((frac * Rat(4)).is_integer()) {
      static constexpr CAmp quarter[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
      return quarter[(frac * Rat(4)).num()];
    }
    const double angle = 2.0 * std::numbers::pi * frac.to_double();
    return {std::cos(angle), std::sin(angle)};
  }
  const double angle = 2.0 * std::numbers::pi * (approx_ - std::floor(approx_));
  return {std::cos(angle), std::sin(angle)};
}

Turn Turn::negated() const { return exact_ ? Turn(-*exact_) : Turn(-approx_); }

std::string Turn::str() const {
  if (exact_) return exact_->str();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", approx_);
  return buf;
}

CAmp Amplitudes::at(std::int64_t k) const {
  if (auto it = exceptions.find(k); it != exceptions.end()) return it->second;
  if (indicator && indicator->first == PdSet::Delta && pd_member(k)) return indicator->second;
  return periodic[static_cast<std::size_t>(floor_mod(k, static_cast<std::int64_t>(periodic.size())))];
}

MixedMeasure Amplitudes::to_measure(const Options& opt) const {
  if (indicator) throw UnsupportedAssignment("indicator amplitudes are not a finite-plus-periodic comb");
  MixedMeasure out;
  out.combs.push_back(PeriodicComb{spacing, periodic});
  for (const auto& [k, a] : exceptions) {
    const CAmp base = periodic[static_cast<std::size_t>(floor_mod(k, static_cast<std::int64_t>(periodic.size())))];
    out.finite.push_back({spacing * Rat(k), a - base});
  }
  return canonicalize(std::move(out), opt);
}

Amplitudes validate(const MixedMeasure& diffraction_in, const PhaseAssignment& phases, const Options& opt) {
  const MixedMeasure d = canonicalize(diffraction_in, opt);
  if (!is_pure_point(d, opt)) throw NotADiffraction("diffraction has a Lebesgue component: " + describe(d));
  if (!is_real(d, opt)) throw NotADiffraction("diffraction is not real: " + describe(d));
  if (!is_positive(d, opt)) throw NotADiffraction("diffraction is not positive: " + describe(d));
  if (!is_inversion_symmetric(d, opt)) throw NotADiffraction("diffraction is not inversion symmetric: " + describe(d));
  if (d.combs.size() > 1) throw UnsupportedAssignment("diffraction combs could not be merged into one lattice");

  Amplitudes out;
  out.spacing = support_lattice(d);
  const Rat& b = out.spacing;

  // Background intensity on the index lattice k -> k*b.
  std::vector<double> intensity{0.0};
  if (!d.combs.empty()) {
    const PeriodicComb& c = d.combs.front();
    const std::int64_t stride = exact_quotient(c.spacing, b);
    intensity.assign(static_cast<std::size_t>(stride) * c.size(), 0.0);
    for (std::size_t j = 0; j < c.size(); ++j) intensity[j * static_cast<std::size_t>(stride)] = c.weights[j].real();
  }
  auto background_intensity = [&](std::int64_t k) {
    return intensity[static_cast<std::size_t>(floor_mod(k, static_cast<std::int64_t>(intensity.size())))];
  };
  std::map<std::int64_t, double> exceptional_intensity;
  for (const auto& atom : d.finite) {
    exceptional_intensity[exact_quotient(atom.position, b)] = d.weight_at(atom.position).real();
  }
  auto intensity_at = [&](std::int64_t k) {
    auto it = exceptional_intensity.find(k);
    return std::max(0.0, it != exceptional_intensity.end() ? it->second : background_intensity(k));
  };

  const PhaseRule rule = resolve(phases, opt);

  if (rule.indicator) {
    const bool uniform_unit_lattice = b == Rat(1) && d.finite.empty() && d.combs.size() == 1 &&
                                      d.combs.front().size() == 1;
    if (!uniform_unit_lattice) {
      throw UnsupportedAssignment("set indicators need a uniform diffraction c * delta_Z, got " + describe(d));
    }
  }

  if (intensity_at(0) > opt.tol) {
    if (std::abs(rule.at(0) / rule.global - 1.0) > opt.tol) {
      throw SymmetryViolation("A(0) must be real and positive");
    }
  } else {
    out.warnings.emplace_back("origin carries no intensity; A(0) = 0 and the condition A(0) > 0 is vacuous");
  }

  const auto period = std::lcm(static_cast<std::int64_t>(intensity.size()),
                               static_cast<std::int64_t>(rule.background.size()));
  if (static_cast<std::uint64_t>(period) > opt.guard) {
    throw RefinementTooLarge("amplitude pattern needs " + std::to_string(period) + " atoms per period");
  }
  out.periodic.resize(static_cast<std::size_t>(period));
  for (std::int64_t k = 0; k < period; ++k) {
    out.periodic[static_cast<std::size_t>(k)] =
        std::sqrt(std::max(0.0, background_intensity(k))) * rule.background[static_cast<std::size_t>(
                                                                 k % static_cast<std::int64_t>(rule.background.size()))];
  }
  if (rule.indicator) out.indicator = std::pair{rule.indicator->first, std::sqrt(intensity_at(0)) * rule.indicator->second};

  std::set<std::int64_t> special;
  for (const auto& [k, _] : exceptional_intensity) special.insert(k);
  for (const auto& [k, _] : rule.exceptions) special.insert(k);
  for (const std::int64_t k : special) {
    const CAmp a = std::sqrt(intensity_at(k)) * rule.at(k);
    if (std::abs(a - out.periodic[static_cast<std::size_t>(floor_mod(k, period))]) > opt.tol) out.exceptions[k] = a;
  }

  auto check_intensity = [&](std::int64_t k) {
    const double expected = intensity_at(k);
    const double got = std::norm(out.at(k));
    if (std::abs(got - expected) > opt.tol * std::max(1.0, expected)) {
      throw IntensityMismatch("|A(" + std::to_string(k) + ")|^2 = " + std::to_string(got) + " but I = " +
                              std::to_string(expected));
    }
  };
  for (std::int64_t k = 0; k < period; ++k) check_intensity(k);
  for (const auto& [k, _] : out.exceptions) check_intensity(k);
  return out;
}

const MixedMeasure& Solution::measure() const {
  if (const auto* m = std::get_if<MixedMeasure>(&value)) return *m;
  throw NotAMeasure("solution is a formal series (tempered distribution), not a measure");
}

const FormalCombSeries& Solution::series() const {
  if (const auto* s = std::get_if<FormalCombSeries>(&value)) return *s;
  throw std::logic_error("solution is a measure, not a series");
}

Solution solve(const MixedMeasure& diffraction_in, const PhaseAssignment& phases, const Options& opt) {
  Amplitudes amps = validate(diffraction_in, phases, opt);
  Solution out{MixedMeasure{}, std::move(amps.warnings)};

  if (amps.indicator) {
    const CAmp inside = amps.indicator->second;
    const CAmp outside = amps.periodic.front();
    const MixedMeasure unit = lattice_comb(Rat(1));
    if (std::abs(inside - outside) <= opt.tol) {
      out.value = scale(unit, outside, opt);
      return out;
    }
    // A = (inside - outside) 1_Delta + outside, so omega = (inside - outside) F(delta_Delta) + outside delta_Z.
    FormalCombSeries s = pd_formal_fourier(0.0);
    s.head = add(scale(s.head, inside - outside, opt), scale(unit, outside, opt), opt);
    s.term_scale = inside - outside;
    out.value = std::move(s);
    return out;
  }

  for (const auto& [k, a] : amps.exceptions) {
    if (k != 0) {
      throw UnsupportedAssignment("exceptional amplitude at k = " + std::to_string(k) +
                                  " inverts to a modulated Lebesgue density, outside the measure class");
    }
  }
  out.value = inverse_fourier(amps.to_measure(opt), opt);
  return out;
}

MixedMeasure table_omega_alpha(const Turn& t_alpha, int e, const Options& opt) {
  if (e != 1 && e != -1) throw std::invalid_argument("table_omega_alpha: e must be +1 or -1");
  std::vector<CAmp> weights(4);
  for (std::int64_t k = 0; k < 4; ++k) {
    const Turn shifted = t_alpha.exact() ? Turn(*t_alpha.exact() + Rat(k, 4)) : Turn(t_alpha.value() + k / 4.0);
    const double cos_term = shifted.phase().real();
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    weights[static_cast<std::size_t>(k)] = 0.25 * (1.0 + 2.0 * cos_term + e * sign);
  }
  return comb(Rat(1, 4), std::move(weights), opt);
}

Solution solve_experimental_delta_set(PdSet set, bool require_measure) {
  if (set != PdSet::Delta) {
    throw UnsupportedAssignment("experimental construction is only defined for delta, not " +
                                std::string(to_string(set)));
  }
  if (require_measure) {
    throw NotAMeasure("F(delta_Delta) is a tempered distribution with infinite total variation on [0, 1/4]");
  }
  FormalCombSeries s = pd_formal_fourier(0.0);
  s.experimental = true;
  return Solution{std::move(s), {"outside the backward-transformable scheme: its autocorrelation is not a measure"}};
}

ResidueClasses recover_residue_phases(const MixedMeasure& amplitudes, const Rat& lattice, const Options& opt) {
  const MixedMeasure a = canonicalize(amplitudes, opt);
  if (a.lebesgue != CAmp{} || !a.finite.empty() || a.combs.size() > 1) {
    throw UnsupportedAssignment("residue phases need a purely periodic amplitude comb");
  }
  if (a.combs.empty()) return ResidueClasses{1, {Turn(Rat(0))}};

  const std::int64_t n = exact_quotient(lcm(lattice, a.combs.front().period()), lattice);
  if (static_cast<std::uint64_t>(n) > opt.guard) throw RefinementTooLarge("residue pattern too long");
  ResidueClasses out{static_cast<int>(n), std::vector<Turn>(static_cast<std::size_t>(n), Turn(Rat(0)))};
  for (std::int64_t j = 1; 2 * j <= n; ++j) {
    const CAmp w = a.weight_at(lattice * Rat(j));
    Turn t(Rat(0));
    if (2 * j == n) {
      t = Turn(w.real() < 0.0 ? Rat(1, 2) : Rat(0));
    } else if (std::abs(w) > opt.tol) {
      t = Turn(std::arg(w) / (2.0 * std::numbers::pi));
    }
    out.turns[static_cast<std::size_t>(j)] = t;
    out.turns[static_cast<std::size_t>(n - j)] = t.negated();
  }
  return out;
}

}  // namespace homometry
