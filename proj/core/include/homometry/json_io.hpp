#pragma once

// JSON forms used by the command-line tool.
//
// Measure:
//   {"lebesgue":[re,im],
//    "combs":[{"spacing":"p/q","weights":[[re,im],...]}],
//    "finite":[["p/q",[re,im]],...]}
//
// Phase assignment:
//   {"kind":"constant","u":[re,im]}            or {"kind":"constant","turn":"p/q"}
//   {"kind":"residue","n":4,"turns":["0","1/4","1/2","3/4"]}
//   {"kind":"exceptions","default_turn":"1/2","exceptions":{"0":"0"}}
//   {"kind":"indicator","set":"delta","inside_turn":"0","outside_turn":"1/2"}
//
// Turns are rational strings ("p/q", "p" or a terminating decimal) or JSON numbers.
// Floating output is rounded to 12 significant digits.

#include <nlohmann/json.hpp>

#include "homometry/limit_periodic.hpp"
#include "homometry/measure.hpp"
#include "homometry/solver.hpp"

namespace homometry {

class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Rounds to 12 significant digits; -0 becomes 0.
double round12(double v);

nlohmann::json to_json(CAmp w);
nlohmann::json to_json(const MixedMeasure& m);
nlohmann::json to_json(const PhaseAssignment& p);
/// Head, term rule and scale, damping, the first `expanded_terms` terms and their partial sum.
nlohmann::json to_json(const FormalCombSeries& s, int expanded_terms = 0, const Options& opt = {});
nlohmann::json to_json(const Solution& s, int expanded_terms = 0, const Options& opt = {});

CAmp camp_from_json(const nlohmann::json& j);
/// Throws SchemaError on malformed input. The result is canonical.
MixedMeasure measure_from_json(const nlohmann::json& j, const Options& opt = {});
/// Throws SchemaError on malformed input and UnsupportedAssignment on an unknown kind.
PhaseAssignment phases_from_json(const nlohmann::json& j);
Turn turn_from_json(const nlohmann::json& j);

/// Parses text, mapping JSON syntax errors to SchemaError.
nlohmann::json parse_json_text(const std::string& text);

}  // namespace homometry
