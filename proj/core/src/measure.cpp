#include "homometry/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

namespace homometry {

namespace {

std::int64_t floor_mod(std::int64_t k, std::int64_t n) {
  const std::int64_t r = k % n;
  return r < 0 ? r + n : r;
}

CAmp snap(CAmp w, double tol) { return std::abs(w) <= tol ? CAmp{} : w; }

// Minimal period and coarsest lattice for a single comb; nullopt if it vanishes.
std::optional<PeriodicComb> reduce_comb(PeriodicComb c, double tol) {
  if (c.spacing <= Rat(0)) throw std::invalid_argument("comb spacing must be positive");
  if (c.weights.empty()) throw std::invalid_argument("comb needs at least one weight");
  for (auto& w : c.weights) w = snap(w, tol);
  if (std::all_of(c.weights.begin(), c.weights.end(), [](CAmp w) { return w == CAmp{}; })) return std::nullopt;

  const std::size_t n = c.weights.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t j = d; j < n && periodic; ++j) {
      periodic = std::abs(c.weights[j] - c.weights[j % d]) <= tol;
    }
    if (periodic) {
      c.weights.resize(d);
      break;
    }
  }

  const std::size_t period = c.weights.size();
  std::size_t g = period;
  for (std::size_t j = 1; j < period; ++j) {
    if (c.weights[j] != CAmp{}) g = std::gcd(g, j);
  }
  if (g > 1) {
    std::vector<CAmp> thinned;
    thinned.reserve(period / g);
    for (std::size_t j = 0; j < period; j += g) thinned.push_back(c.weights[j]);
    c.weights = std::move(thinned);
    c.spacing *= Rat(static_cast<std::int64_t>(g));
  }
  return c;
}

std::size_t refinement_size(const PeriodicComb& a, const PeriodicComb& b, const Options& opt) {
  try {
    const Rat spacing = gcd(a.spacing, b.spacing);
    const Rat period = lcm(a.period(), b.period());
    const std::int64_t count = exact_quotient(period, spacing);
    if (count < 0 || static_cast<std::uint64_t>(count) > opt.guard) {
      throw RefinementTooLarge("merging combs with spacings " + a.spacing.str() + " and " + b.spacing.str() +
                               " needs " + std::to_string(count) + " atoms per period (guard " +
                               std::to_string(opt.guard) + ")");
    }
    return static_cast<std::size_t>(count);
  } catch (const std::overflow_error&) {
    throw RefinementTooLarge("comb refinement overflows 64-bit positions");
  }
}

PeriodicComb merge(const PeriodicComb& a, const PeriodicComb& b, const Options& opt) {
  const std::size_t count = refinement_size(a, b, opt);
  PeriodicComb out{gcd(a.spacing, b.spacing), std::vector<CAmp>(count)};
  for (const PeriodicComb* c : {&a, &b}) {
    const std::int64_t step = exact_quotient(c->spacing, out.spacing);
    for (std::size_t i = 0, j = 0; i < count; i += static_cast<std::size_t>(step), ++j) {
      out.weights[i] += c->weights[j % c->weights.size()];
    }
  }
  return out;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string format_camp(CAmp w) {
  if (std::abs(w.imag()) <= 1e-15) return format_number(w.real());
  return "(" + format_number(w.real()) + (w.imag() < 0 ? "-" : "+") + format_number(std::abs(w.imag())) + "i)";
}

}  // namespace

CAmp PeriodicComb::at_index(std::int64_t k) const {
  const auto n = static_cast<std::int64_t>(weights.size());
  return weights[static_cast<std::size_t>(floor_mod(k, n))];
}

CAmp PeriodicComb::at(const Rat& x) const {
  const Rat q = x / spacing;
  return q.is_integer() ? at_index(q.num()) : CAmp{};
}

CAmp MixedMeasure::weight_at(const Rat& x) const {
  CAmp w{};
  for (const auto& c : combs) w += c.at(x);
  auto it = std::lower_bound(finite.begin(), finite.end(), x,
                             [](const Atom& a, const Rat& p) { return a.position < p; });
  if (it != finite.end() && it->position == x) w += it->weight;
  return w;
}

MixedMeasure zero_measure() { return {}; }

MixedMeasure lebesgue(CAmp c) { return canonicalize(MixedMeasure{c, {}, {}}); }

MixedMeasure dirac(const Rat& position, CAmp weight) {
  return canonicalize(MixedMeasure{{}, {}, {{position, weight}}});
}

MixedMeasure comb(const Rat& spacing, std::vector<CAmp> weights, const Options& opt) {
  return canonicalize(MixedMeasure{{}, {PeriodicComb{spacing, std::move(weights)}}, {}}, opt);
}

MixedMeasure lattice_comb(const Rat& spacing) { return comb(spacing, {1.0}); }

MixedMeasure canonicalize(MixedMeasure m, const Options& opt) {
  m.lebesgue = snap(m.lebesgue, opt.tol);

  std::vector<PeriodicComb> reduced;
  for (auto& c : m.combs) {
    if (auto r = reduce_comb(std::move(c), opt.tol)) reduced.push_back(std::move(*r));
  }
  if (reduced.size() > 1) {
    PeriodicComb acc = reduced.front();
    for (std::size_t i = 1; i < reduced.size(); ++i) acc = merge(acc, reduced[i], opt);
    reduced.clear();
    if (auto r = reduce_comb(std::move(acc), opt.tol)) reduced.push_back(std::move(*r));
  }
  m.combs = std::move(reduced);

  std::sort(m.finite.begin(), m.finite.end(),
            [](const Atom& a, const Atom& b) { return a.position < b.position; });
  FiniteComb merged;
  for (const auto& atom : m.finite) {
    if (!merged.empty() && merged.back().position == atom.position) {
      merged.back().weight += atom.weight;
    } else {
      merged.push_back(atom);
    }
  }
  std::erase_if(merged, [&](const Atom& a) { return std::abs(a.weight) <= opt.tol; });
  m.finite = std::move(merged);
  return m;
}

MixedMeasure add(const MixedMeasure& a, const MixedMeasure& b, const Options& opt) {
  MixedMeasure out = a;
  out.lebesgue += b.lebesgue;
  out.combs.insert(out.combs.end(), b.combs.begin(), b.combs.end());
  out.finite.insert(out.finite.end(), b.finite.begin(), b.finite.end());
  return canonicalize(std::move(out), opt);
}

MixedMeasure scale(const MixedMeasure& m, CAmp c, const Options& opt) {
  MixedMeasure out = m;
  out.lebesgue *= c;
  for (auto& cb : out.combs) {
    for (auto& w : cb.weights) w *= c;
  }
  for (auto& atom : out.finite) atom.weight *= c;
  return canonicalize(std::move(out), opt);
}

MixedMeasure reflect(const MixedMeasure& m, const Options& opt) {
  MixedMeasure out;
  out.lebesgue = m.lebesgue;
  for (const auto& c : m.combs) {
    PeriodicComb r{c.spacing, std::vector<CAmp>(c.size())};
    for (std::size_t j = 0; j < c.size(); ++j) r.weights[j] = c.at_index(-static_cast<std::int64_t>(j));
    out.combs.push_back(std::move(r));
  }
  for (const auto& atom : m.finite) out.finite.push_back({-atom.position, atom.weight});
  return canonicalize(std::move(out), opt);
}

MixedMeasure conjugate(const MixedMeasure& m, const Options& opt) {
  MixedMeasure out = m;
  out.lebesgue = std::conj(out.lebesgue);
  for (auto& c : out.combs) {
    for (auto& w : c.weights) w = std::conj(w);
  }
  for (auto& atom : out.finite) atom.weight = std::conj(atom.weight);
  return canonicalize(std::move(out), opt);
}

MixedMeasure reflect_conjugate(const MixedMeasure& m, const Options& opt) {
  return conjugate(reflect(m, opt), opt);
}

MixedMeasure strip_finite(MixedMeasure m) {
  m.finite.clear();
  return m;
}

Restriction restrict(const MixedMeasure& m, const Rat& a, const Rat& b, const Options& opt) {
  if (!(a < b)) throw std::invalid_argument("restrict: need a < b");
  std::map<Rat, CAmp> atoms;
  for (const auto& c : m.combs) {
    const std::int64_t lo = (a / c.spacing).ceil();
    const std::int64_t hi = (b / c.spacing).floor();
    for (std::int64_t k = lo; k <= hi; ++k) {
      const CAmp w = c.at_index(k);
      if (w != CAmp{}) atoms[c.spacing * Rat(k)] += w;
    }
  }
  for (const auto& atom : m.finite) {
    if (a <= atom.position && atom.position <= b) atoms[atom.position] += atom.weight;
  }
  Restriction out{{}, m.lebesgue * (b - a).to_double()};
  for (const auto& [x, w] : atoms) {
    if (std::abs(w) > opt.tol) out.atoms.push_back({x, w});
  }
  return out;
}

bool is_real(const MixedMeasure& m, const Options& opt) {
  auto real = [&](CAmp w) { return std::abs(w.imag()) <= opt.tol; };
  if (!real(m.lebesgue)) return false;
  for (const auto& c : m.combs) {
    if (!std::all_of(c.weights.begin(), c.weights.end(), real)) return false;
  }
  return std::all_of(m.finite.begin(), m.finite.end(), [&](const Atom& a) { return real(a.weight); });
}

bool is_positive(const MixedMeasure& m, const Options& opt) {
  if (!is_real(m, opt)) return false;
  auto nonneg = [&](CAmp w) { return w.real() >= -opt.tol; };
  if (!nonneg(m.lebesgue)) return false;
  // A negative comb weight repeats infinitely often, so finite atoms cannot repair it.
  for (const auto& c : m.combs) {
    if (!std::all_of(c.weights.begin(), c.weights.end(), nonneg)) return false;
  }
  // Finite atoms combine with the comb weight underneath them.
  return std::all_of(m.finite.begin(), m.finite.end(),
                     [&](const Atom& a) { return nonneg(m.weight_at(a.position)); });
}

bool is_inversion_symmetric(const MixedMeasure& m, const Options& opt) {
  return approx_equal(reflect(m, opt), m, opt);
}

bool is_pure_point(const MixedMeasure& m, const Options& opt) { return std::abs(m.lebesgue) <= opt.tol; }

bool approx_equal(const MixedMeasure& a_in, const MixedMeasure& b_in, const Options& opt) {
  const MixedMeasure a = canonicalize(a_in, opt);
  const MixedMeasure b = canonicalize(b_in, opt);
  if (std::abs(a.lebesgue - b.lebesgue) > opt.tol) return false;
  if (a.combs.size() != b.combs.size() || a.finite.size() != b.finite.size()) return false;
  for (std::size_t i = 0; i < a.combs.size(); ++i) {
    const auto& ca = a.combs[i];
    const auto& cb = b.combs[i];
    if (ca.spacing != cb.spacing || ca.size() != cb.size()) return false;
    for (std::size_t j = 0; j < ca.size(); ++j) {
      if (std::abs(ca.weights[j] - cb.weights[j]) > opt.tol) return false;
    }
  }
  for (std::size_t i = 0; i < a.finite.size(); ++i) {
    if (a.finite[i].position != b.finite[i].position) return false;
    if (std::abs(a.finite[i].weight - b.finite[i].weight) > opt.tol) return false;
  }
  return true;
}

Rat support_lattice(const MixedMeasure& m) {
  Rat g(0);
  for (const auto& c : m.combs) g = gcd(g, c.spacing);
  for (const auto& atom : m.finite) {
    if (!atom.position.is_zero()) g = gcd(g, abs(atom.position));
  }
  return g.is_zero() ? Rat(1) : g;
}

std::string describe(const MixedMeasure& m) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (m.lebesgue != CAmp{}) {
    sep();
    os << format_camp(m.lebesgue) << "*lambda";
  }
  for (const auto& c : m.combs) {
    sep();
    os << "comb(" << c.spacing << "; [";
    for (std::size_t j = 0; j < c.size(); ++j) os << (j ? ", " : "") << format_camp(c.weights[j]);
    os << "])";
  }
  if (!m.finite.empty()) {
    sep();
    os << "{";
    for (std::size_t i = 0; i < m.finite.size(); ++i) {
      os << (i ? ", " : "") << m.finite[i].position << ": " << format_camp(m.finite[i].weight);
    }
    os << "}";
  }
  if (first) os << "0";
  return os.str();
}

MixedMeasure operator+(const MixedMeasure& a, const MixedMeasure& b) { return add(a, b); }
MixedMeasure operator-(const MixedMeasure& a, const MixedMeasure& b) { return add(a, scale(b, -1.0)); }
MixedMeasure operator-(const MixedMeasure& m) { return scale(m, -1.0); }
MixedMeasure operator*(CAmp c, const MixedMeasure& m) { return scale(m, c); }
bool operator==(const MixedMeasure& a, const MixedMeasure& b) { return approx_equal(a, b); }

}  // namespace homometry
