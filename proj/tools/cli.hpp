#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "homometry/homometry.hpp"

namespace homometry::cli {

enum class Format { Auto, Json, Csv, Table };

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kFalse = 1, kInputError = 2, kResourceGuard = 3 };

// Each command returns the data it prints, so callers and tests can compare it directly
// with the library result.
nlohmann::json cmd_diffract(const MixedMeasure& m, const Options& opt);
nlohmann::json cmd_solve(const MixedMeasure& diffraction, const PhaseAssignment& phases, int expanded_terms,
                         const Options& opt);
nlohmann::json cmd_table(const Options& opt);

struct TvRow {
  double eps;
  int n;
  double value;
};
std::vector<TvRow> cmd_pd_tv(const std::vector<double>& eps, int n_max, const Rat& a, const Rat& b,
                             const Options& opt);

struct PairingRow {
  double eps;
  double value;
};
/// Pairing of rho_eps (or omega_eps = 2 rho_eps - delta_Z when `omega` is set) with a Gaussian.
std::vector<PairingRow> cmd_pd_regularize(const std::vector<double>& eps, double center, double sigma, bool omega);

struct VerifyResult {
  bool homometric = false;
  bool oracle_checked = false;
  bool oracle_ok = true;
  double oracle_error = 0.0;
};
VerifyResult cmd_verify(const MixedMeasure& a, const MixedMeasure& b, const Rat* oracle_radius, const Options& opt);

/// Full command-line entry point. Arguments "-" read the stdin stream; arguments starting
/// with '{' are taken as inline JSON; anything else is a file path.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace homometry::cli
