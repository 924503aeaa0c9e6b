#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "homometry/json_io.hpp"

namespace homometry::cli {

using nlohmann::json;

namespace {

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", round12(v));
  return buf;
}

std::string read_source(const std::string& source, std::istream& in) {
  if (source == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  if (!source.empty() && (source.front() == '{' || source.front() == '[')) return source;
  std::ifstream file(source);
  if (!file) throw SchemaError("cannot open '" + source + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

MixedMeasure load_measure(const std::string& source, std::istream& in, const Options& opt) {
  return measure_from_json(parse_json_text(read_source(source, in)), opt);
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(Rat::parse(item).to_double());
  }
  if (out.empty()) throw std::invalid_argument("empty number list");
  return out;
}

void print_measure_table(std::ostream& out, const std::string& label, const MixedMeasure& m) {
  out << label << ": " << describe(m) << "\n";
}

}  // namespace

json cmd_diffract(const MixedMeasure& m, const Options& opt) {
  return {{"input", to_json(m)},
          {"autocorrelation", to_json(autocorrelate(m, opt))},
          {"diffraction", to_json(diffraction(m, opt))}};
}

json cmd_solve(const MixedMeasure& d, const PhaseAssignment& phases, int expanded_terms, const Options& opt) {
  return to_json(solve(d, phases, opt), expanded_terms, opt);
}

json cmd_table(const Options& opt) {
  json rows = json::array();
  for (const Rat t : {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4)}) {
    for (const int e : {1, -1}) {
      const MixedMeasure cell = table_omega_alpha(Turn(t), e, opt);
      json weights = json::array();
      for (int k = 0; k < 4; ++k) weights.push_back(round12(cell.weight_at(Rat(k, 4)).real()));
      rows.push_back({{"t_alpha", t.str()}, {"e", e}, {"weights", weights}, {"measure", to_json(cell)}});
    }
  }
  return rows;
}

std::vector<TvRow> cmd_pd_tv(const std::vector<double>& eps, int n_max, const Rat& a, const Rat& b,
                             const Options& opt) {
  std::vector<TvRow> rows;
  for (const double e : eps) {
    const FormalCombSeries s = pd_formal_fourier(e);
    for (int n = 0; n <= n_max; ++n) rows.push_back({e, n, total_variation(series_partial_sum(s, n, opt), a, b, opt)});
  }
  return rows;
}

std::vector<PairingRow> cmd_pd_regularize(const std::vector<double>& eps, double center, double sigma, bool omega) {
  std::vector<PairingRow> rows;
  for (const double e : eps) {
    FormalCombSeries s = pd_formal_fourier(e);
    if (omega) {
      s.head = add(scale(s.head, 2.0), scale(lattice_comb(Rat(1)), -1.0));
      s.term_scale = 2.0;
    }
    rows.push_back({e, pair_with_gaussian(s, center, sigma).real()});
  }
  return rows;
}

VerifyResult cmd_verify(const MixedMeasure& a, const MixedMeasure& b, const Rat* oracle_radius, const Options& opt) {
  VerifyResult r;
  r.homometric = verify_homometric(a, b, opt);
  if (oracle_radius) {
    r.oracle_checked = true;
    const double limit = 5.0 / oracle_radius->to_double();
    for (const MixedMeasure* m : {&a, &b}) {
      const OracleReport rep = compare_with_exact(*m, *oracle_radius, Rat(5), opt);
      r.oracle_error = std::max({r.oracle_error, rep.autocorrelation_error, rep.bragg_error});
    }
    r.oracle_ok = r.oracle_error <= limit;
  }
  return r;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homometric structures for pure point diffraction on the real line"};
  app.require_subcommand(1);

  Options opt;
  bool as_json = false;
  bool as_csv = false;
  bool as_table = false;
  app.add_option("--tol", opt.tol, "Weight tolerance")->capture_default_str();
  app.add_option("--guard", opt.guard, "Largest number of atoms per period in a comb refinement")
      ->capture_default_str();
  auto* json_flag = app.add_flag("--json", as_json, "JSON output");
  auto* csv_flag = app.add_flag("--csv", as_csv, "CSV output");
  auto* table_flag = app.add_flag("--table", as_table, "Human-readable output");
  json_flag->excludes(csv_flag)->excludes(table_flag);
  csv_flag->excludes(table_flag);

  auto* diffract = app.add_subcommand("diffract", "Autocorrelation and diffraction of a measure");
  std::string diffract_input;
  diffract->add_option("measure", diffract_input, "Measure JSON (file, '-' or inline)")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Structure with a given diffraction and phase assignment");
  std::string solve_diffraction;
  std::string solve_phases;
  int solve_terms = 2;
  solve_cmd->add_option("diffraction", solve_diffraction, "Diffraction measure JSON")->required();
  solve_cmd->add_option("phases", solve_phases, "Phase assignment JSON")->required();
  solve_cmd->add_option("--terms", solve_terms, "Series terms to expand")->check(CLI::Range(0, 8))->capture_default_str();

  auto* table_cmd = app.add_subcommand("table", "The eight 4-periodic members of the class of delta_Z");

  auto* pd = app.add_subcommand("pd", "Period-doubling set and the formal series of its comb");
  pd->require_subcommand(1);
  auto* pd_enum = pd->add_subcommand("enumerate", "Members of Delta in [lo, hi]");
  std::int64_t lo = 0;
  std::int64_t hi = 10;
  pd_enum->add_option("--lo", lo)->capture_default_str();
  pd_enum->add_option("--hi", hi)->capture_default_str();
  auto* pd_tv = pd->add_subcommand("tv", "Total variation of partial sums on [a, b]");
  std::string tv_eps = "0";
  int tv_nmax = 8;
  std::string tv_a = "0";
  std::string tv_b = "1/4";
  pd_tv->add_option("--eps", tv_eps, "Comma-separated damping values")->capture_default_str();
  pd_tv->add_option("--nmax", tv_nmax)->check(CLI::Range(0, 9))->capture_default_str();
  pd_tv->add_option("--a", tv_a)->capture_default_str();
  pd_tv->add_option("--b", tv_b)->capture_default_str();
  auto* pd_reg = pd->add_subcommand("regularize", "Gaussian pairings of rho_eps");
  std::string reg_eps;
  int reg_jmax = 20;
  double reg_center = 0.0;
  double reg_sigma = 1.0;
  bool reg_omega = false;
  pd_reg->add_option("--eps", reg_eps, "Comma-separated damping values (default 2^-j, j = 0..jmax)");
  pd_reg->add_option("--jmax", reg_jmax)->check(CLI::Range(0, 60))->capture_default_str();
  pd_reg->add_option("--center", reg_center)->capture_default_str();
  pd_reg->add_option("--sigma", reg_sigma)->check(CLI::PositiveNumber)->capture_default_str();
  pd_reg->add_flag("--omega", reg_omega, "Pair omega_eps = 2 rho_eps - delta_Z instead");

  auto* verify = app.add_subcommand("verify", "Exit 0 iff two measures are homometric");
  std::string verify_a;
  std::string verify_b;
  std::string oracle_radius;
  verify->add_option("first", verify_a)->required();
  verify->add_option("second", verify_b)->required();
  verify->add_option("--oracle", oracle_radius, "Also require window-oracle agreement within 5/R at radius R");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  auto format = [&](Format fallback) {
    if (as_json) return Format::Json;
    if (as_csv) return Format::Csv;
    if (as_table) return Format::Table;
    return fallback;
  };

  try {
    if (*diffract) {
      const MixedMeasure m = load_measure(diffract_input, in, opt);
      const json result = cmd_diffract(m, opt);
      if (format(Format::Json) == Format::Table) {
        print_measure_table(out, "omega", m);
        print_measure_table(out, "gamma", measure_from_json(result["autocorrelation"], opt));
        print_measure_table(out, "diffraction", measure_from_json(result["diffraction"], opt));
      } else {
        out << result.dump(2) << "\n";
      }
      return kOk;
    }
    if (*solve_cmd) {
      const MixedMeasure d = load_measure(solve_diffraction, in, opt);
      const PhaseAssignment phases = phases_from_json(parse_json_text(read_source(solve_phases, in)));
      const json result = cmd_solve(d, phases, solve_terms, opt);
      if (format(Format::Json) == Format::Table) {
        const Solution s = solve(d, phases, opt);
        if (s.is_measure()) {
          print_measure_table(out, "omega", s.measure());
        } else {
          const auto& series = s.series();
          out << "omega = head + (" << fmt12(series.term_scale.real()) << ") * " << series.rule.formula << "\n";
          print_measure_table(out, "head", series.head);
        }
        for (const auto& w : s.warnings) out << "warning: " << w << "\n";
      } else {
        out << result.dump(2) << "\n";
      }
      return kOk;
    }
    if (*table_cmd) {
      const json rows = cmd_table(opt);
      switch (format(Format::Table)) {
        case Format::Json:
          out << rows.dump(2) << "\n";
          break;
        case Format::Csv:
          out << "t_alpha,e,a,b,c,d\n";
          for (const auto& r : rows) {
            out << r["t_alpha"].get<std::string>() << "," << r["e"].get<int>();
            for (const auto& w : r["weights"]) out << "," << fmt12(w.get<double>());
            out << "\n";
          }
          break;
        default:
          out << "t_alpha    e   (a, b, c, d) on {0, 1/4, 1/2, 3/4} + Z\n";
          for (const auto& r : rows) {
            std::string t = r["t_alpha"].get<std::string>();
            t.resize(8, ' ');
            out << t << "  " << (r["e"].get<int>() > 0 ? "+1" : "-1") << "  (";
            bool first = true;
            for (const auto& w : r["weights"]) {
              out << (first ? "" : ", ") << fmt12(w.get<double>());
              first = false;
            }
            out << ")\n";
          }
      }
      return kOk;
    }
    if (*pd_enum) {
      if (lo > hi) throw std::invalid_argument("--lo must not exceed --hi");
      if (hi - lo > 100'000'000) throw std::invalid_argument("range too large");
      const auto members = pd_enumerate(lo, hi);
      if (format(Format::Csv) == Format::Json) {
        out << json(members).dump() << "\n";
      } else {
        out << "k,level\n";
        for (const auto k : members) out << k << "," << *pd_level(k) << "\n";
      }
      return kOk;
    }
    if (*pd_tv) {
      const auto eps = parse_number_list(tv_eps);
      const auto rows = cmd_pd_tv(eps, tv_nmax, Rat::parse(tv_a), Rat::parse(tv_b), opt);
      if (format(Format::Csv) == Format::Json) {
        json j = json::array();
        for (const auto& r : rows) j.push_back({{"eps", round12(r.eps)}, {"N", r.n}, {"value", round12(r.value)}});
        out << j.dump(2) << "\n";
      } else if (eps.size() == 1) {
        out << "N,value\n";
        for (const auto& r : rows) out << r.n << "," << fmt12(r.value) << "\n";
      } else {
        out << "eps,N,value\n";
        for (const auto& r : rows) out << fmt12(r.eps) << "," << r.n << "," << fmt12(r.value) << "\n";
      }
      return kOk;
    }
    if (*pd_reg) {
      std::vector<double> eps;
      if (reg_eps.empty()) {
        for (int j = 0; j <= reg_jmax; ++j) eps.push_back(std::ldexp(1.0, -j));
      } else {
        eps = parse_number_list(reg_eps);
      }
      const auto rows = cmd_pd_regularize(eps, reg_center, reg_sigma, reg_omega);
      if (format(Format::Csv) == Format::Json) {
        json j = json::array();
        for (const auto& r : rows) j.push_back({{"eps", round12(r.eps)}, {"value", round12(r.value)}});
        out << j.dump(2) << "\n";
      } else {
        out << "eps,value\n";
        for (const auto& r : rows) out << fmt12(r.eps) << "," << fmt12(r.value) << "\n";
      }
      return kOk;
    }
    if (*verify) {
      const MixedMeasure a = load_measure(verify_a, in, opt);
      const MixedMeasure b = load_measure(verify_b, in, opt);
      std::optional<Rat> radius;
      if (!oracle_radius.empty()) {
        radius = Rat::parse(oracle_radius);
        if (*radius < Rat(10)) throw std::invalid_argument("--oracle radius must be at least 10");
      }
      const VerifyResult r = cmd_verify(a, b, radius ? &*radius : nullptr, opt);
      if (format(Format::Table) == Format::Json) {
        json j = {{"homometric", r.homometric}};
        if (r.oracle_checked) j["oracle"] = {{"ok", r.oracle_ok}, {"max_error", round12(r.oracle_error)}};
        out << j.dump(2) << "\n";
      } else {
        out << "homometric: " << (r.homometric ? "yes" : "no") << "\n";
        if (r.oracle_checked) {
          out << "oracle: max error " << fmt12(r.oracle_error) << (r.oracle_ok ? " (ok)" : " (exceeds 5/R)") << "\n";
        }
      }
      return r.homometric && r.oracle_ok ? kOk : kFalse;
    }
  } catch (const RefinementTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kResourceGuard;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kResourceGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace homometry::cli
