#include "homometry/eberlein.hpp"

#include <numeric>
#include <utility>

namespace homometry {

namespace {

CAmp comb_density(const PeriodicComb& c) {
  const CAmp total = std::accumulate(c.weights.begin(), c.weights.end(), CAmp{});
  return total / c.period().to_double();
}

CAmp combs_density(const MixedMeasure& m) {
  CAmp d{};
  for (const auto& c : m.combs) d += comb_density(c);
  return d;
}

// Nonzero atoms of c over one common period, as (slot index on the fine lattice, weight).
std::vector<std::pair<std::int64_t, CAmp>> embed(const PeriodicComb& c, const Rat& fine, std::int64_t slots) {
  const std::int64_t step = exact_quotient(c.spacing, fine);
  std::vector<std::pair<std::int64_t, CAmp>> out;
  for (std::int64_t i = 0, j = 0; i < slots; i += step, ++j) {
    const CAmp w = c.at_index(j);
    if (w != CAmp{}) out.emplace_back(i, w);
  }
  return out;
}

PeriodicComb cross_correlate(const PeriodicComb& a, const PeriodicComb& b, const Options& opt) {
  Rat fine;
  Rat period;
  std::int64_t slots = 0;
  try {
    fine = gcd(a.spacing, b.spacing);
    period = lcm(a.period(), b.period());
    slots = exact_quotient(period, fine);
  } catch (const std::overflow_error&) {
    throw RefinementTooLarge("comb correlation overflows 64-bit positions");
  }
  if (slots < 0 || static_cast<std::uint64_t>(slots) > opt.guard) {
    throw RefinementTooLarge("comb correlation needs " + std::to_string(slots) + " atoms per period (guard " +
                             std::to_string(opt.guard) + ")");
  }

  const auto u = embed(a, fine, slots);
  const auto v = embed(b, fine, slots);
  PeriodicComb out{fine, std::vector<CAmp>(static_cast<std::size_t>(slots))};
  const double inv_period = 1.0 / period.to_double();
  for (const auto& [i, wu] : u) {
    for (const auto& [s, wv] : v) {
      std::int64_t d = i - s;
      if (d < 0) d += slots;
      out.weights[static_cast<std::size_t>(d)] += wu * std::conj(wv) * inv_period;
    }
  }
  return out;
}

}  // namespace

CAmp mean_density(const MixedMeasure& m) { return m.lebesgue + combs_density(m); }

MixedMeasure eberlein(const MixedMeasure& m1, const MixedMeasure& m2, const Options& opt) {
  MixedMeasure out;
  out.lebesgue = m1.lebesgue * std::conj(m2.lebesgue) + m1.lebesgue * std::conj(combs_density(m2)) +
                 combs_density(m1) * std::conj(m2.lebesgue);
  for (const auto& a : m1.combs) {
    for (const auto& b : m2.combs) out.combs.push_back(cross_correlate(a, b, opt));
  }
  return canonicalize(std::move(out), opt);
}

MixedMeasure autocorrelate(const MixedMeasure& m, const Options& opt) { return eberlein(m, m, opt); }

}  // namespace homometry
