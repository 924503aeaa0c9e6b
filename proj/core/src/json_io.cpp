#include "homometry/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace homometry {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Rat rat_from_json(const json& j, const char* what) {
  try {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  } catch (const std::exception& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
  throw SchemaError(std::string(what) + " must be a rational string \"p/q\"");
}

void require_object(const json& j, const char* what, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw SchemaError(std::string(what) + " must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw SchemaError(std::string(what) + ": unknown key \"" + key + "\"");
  }
}

json turn_to_json(const Turn& t) {
  if (t.exact()) return t.exact()->str();
  return round12(t.value());
}

}  // namespace

double round12(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v == 0.0 ? 0.0 : v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

json to_json(CAmp w) { return json::array({round12(w.real()), round12(w.imag())}); }

json to_json(const MixedMeasure& m) {
  json combs = json::array();
  for (const auto& c : m.combs) {
    json weights = json::array();
    for (const auto& w : c.weights) weights.push_back(to_json(w));
    combs.push_back({{"spacing", c.spacing.str()}, {"weights", weights}});
  }
  json finite = json::array();
  for (const auto& a : m.finite) finite.push_back(json::array({a.position.str(), to_json(a.weight)}));
  return {{"lebesgue", to_json(m.lebesgue)}, {"combs", combs}, {"finite", finite}};
}

json to_json(const PhaseAssignment& p) {
  return std::visit(overloaded{
                        [](const ConstantPhase& c) -> json { return {{"kind", "constant"}, {"u", to_json(c.u)}}; },
                        [](const ResidueClasses& r) -> json {
                          json turns = json::array();
                          for (const auto& t : r.turns) turns.push_back(turn_to_json(t));
                          return {{"kind", "residue"}, {"n", r.n}, {"turns", turns}};
                        },
                        [](const FiniteExceptions& f) -> json {
                          json ex = json::object();
                          for (const auto& [k, t] : f.exceptions) ex[std::to_string(k)] = turn_to_json(t);
                          return {{"kind", "exceptions"}, {"default_turn", turn_to_json(f.default_turn)}, {"exceptions", ex}};
                        },
                        [](const SetIndicator& s) -> json {
                          return {{"kind", "indicator"},
                                  {"set", std::string(to_string(s.set))},
                                  {"inside_turn", turn_to_json(s.inside)},
                                  {"outside_turn", turn_to_json(s.outside)}};
                        },
                    },
                    p);
}

json to_json(const FormalCombSeries& s, int expanded_terms, const Options& opt) {
  json terms = json::array();
  for (int n = 1; n <= expanded_terms; ++n) {
    const ModulatedComb t = s.term(n);
    terms.push_back({{"n", n},
                     {"spacing", t.spacing.str()},
                     {"frequency", t.frequency.str()},
                     {"amplitude", round12(t.amplitude)}});
  }
  json out = {{"head", to_json(s.head)},
              {"term_scale", to_json(s.term_scale)},
              {"damping", round12(s.damping)},
              {"rule", {{"name", s.rule.name}, {"formula", s.rule.formula}}},
              {"experimental", s.experimental},
              {"is_measure", s.is_measure()},
              {"terms", terms}};
  if (expanded_terms > 0) out["partial_sum"] = to_json(series_partial_sum(s, expanded_terms, opt));
  return out;
}

json to_json(const Solution& s, int expanded_terms, const Options& opt) {
  json out;
  if (s.is_measure()) {
    out = {{"type", "measure"}, {"measure", to_json(s.measure())}};
  } else {
    out = {{"type", "series"}, {"series", to_json(s.series(), expanded_terms, opt)}};
  }
  out["warnings"] = s.warnings;
  return out;
}

CAmp camp_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    const CAmp w{j[0].get<double>(), j[1].get<double>()};
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) throw SchemaError("weights must be finite");
    return w;
  }
  throw SchemaError("complex value must be [re, im] or a number, got " + j.dump());
}

MixedMeasure measure_from_json(const json& j, const Options& opt) {
  require_object(j, "measure", {"lebesgue", "combs", "finite"});
  MixedMeasure m;
  if (j.contains("lebesgue")) m.lebesgue = camp_from_json(j["lebesgue"]);
  if (j.contains("combs")) {
    if (!j["combs"].is_array()) throw SchemaError("combs must be an array");
    for (const auto& c : j["combs"]) {
      require_object(c, "comb", {"spacing", "weights"});
      if (!c.contains("spacing") || !c.contains("weights")) throw SchemaError("comb needs spacing and weights");
      PeriodicComb pc{rat_from_json(c["spacing"], "spacing"), {}};
      if (pc.spacing <= Rat(0)) throw SchemaError("comb spacing must be positive");
      if (!c["weights"].is_array() || c["weights"].empty()) throw SchemaError("comb weights must be a non-empty array");
      for (const auto& w : c["weights"]) pc.weights.push_back(camp_from_json(w));
      m.combs.push_back(std::move(pc));
    }
  }
  if (j.contains("finite")) {
    if (!j["finite"].is_array()) throw SchemaError("finite must be an array");
    for (const auto& a : j["finite"]) {
      if (!a.is_array() || a.size() != 2) throw SchemaError("finite atoms are [\"p/q\", [re, im]] pairs");
      m.finite.push_back({rat_from_json(a[0], "position"), camp_from_json(a[1])});
    }
  }
  return canonicalize(std::move(m), opt);
}

Turn turn_from_json(const json& j) {
  if (j.is_string()) return Turn(rat_from_json(j, "turn"));
  if (j.is_number_integer()) return Turn(Rat(j.get<std::int64_t>()));
  if (j.is_number()) return Turn(j.get<double>());
  throw SchemaError("turn must be a rational string or a number, got " + j.dump());
}

PhaseAssignment phases_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw SchemaError("phase assignment needs a string \"kind\"");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "constant") {
    require_object(j, "constant phase", {"kind", "u", "turn"});
    if (j.contains("u") == j.contains("turn")) throw SchemaError("constant phase needs exactly one of u, turn");
    if (j.contains("u")) return ConstantPhase{camp_from_json(j["u"])};
    return ConstantPhase{turn_from_json(j["turn"]).phase()};
  }
  if (kind == "residue") {
    require_object(j, "residue phase", {"kind", "n", "turns"});
    if (!j.contains("n") || !j["n"].is_number_integer() || !j.contains("turns") || !j["turns"].is_array()) {
      throw SchemaError("residue phase needs integer n and a turns array");
    }
    ResidueClasses r{j["n"].get<int>(), {}};
    for (const auto& t : j["turns"]) r.turns.push_back(turn_from_json(t));
    if (r.n < 1 || r.turns.size() != static_cast<std::size_t>(r.n)) throw SchemaError("residue phase needs n turns");
    return r;
  }
  if (kind == "exceptions") {
    require_object(j, "exceptions phase", {"kind", "default_turn", "exceptions"});
    if (!j.contains("default_turn")) throw SchemaError("exceptions phase needs default_turn");
    FiniteExceptions f{turn_from_json(j["default_turn"]), {}};
    if (j.contains("exceptions")) {
      const json& ex = j["exceptions"];
      if (ex.is_object()) {
        for (const auto& [key, t] : ex.items()) {
          try {
            f.exceptions[std::stoll(key)] = turn_from_json(t);
          } catch (const std::invalid_argument&) {
            throw SchemaError("exception key \"" + key + "\" is not an integer");
          }
        }
      } else if (ex.is_array()) {
        for (const auto& pair : ex) {
          if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer()) {
            throw SchemaError("exceptions array entries are [k, turn]");
          }
          f.exceptions[pair[0].get<std::int64_t>()] = turn_from_json(pair[1]);
        }
      } else {
        throw SchemaError("exceptions must be an object or an array");
      }
    }
    return f;
  }
  if (kind == "indicator") {
    require_object(j, "indicator phase", {"kind", "set", "inside_turn", "outside_turn"});
    if (!j.contains("set") || !j["set"].is_string()) throw SchemaError("indicator phase needs a set name");
    const auto set = parse_pd_set(j["set"].get<std::string>());
    if (!set) throw UnsupportedAssignment("unknown set \"" + j["set"].get<std::string>() + "\"");
    SetIndicator s{*set, Turn(Rat(0)), Turn(Rat(1, 2))};
    if (j.contains("inside_turn")) s.inside = turn_from_json(j["inside_turn"]);
    if (j.contains("outside_turn")) s.outside = turn_from_json(j["outside_turn"]);
    return s;
  }
  throw UnsupportedAssignment("unknown phase assignment kind \"" + kind + "\"");
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace homometry
