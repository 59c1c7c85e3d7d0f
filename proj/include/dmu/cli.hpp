#ifndef DMU_CLI_HPP
#define DMU_CLI_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dmu/corona.hpp"
#include "dmu/stable_rank.hpp"

namespace dmu::cli {

enum class Command { Norm, Ldi, Multnorm, Corona, KoszulCheck, Reduce, VerifySuite, GridExport };

std::string_view to_string(Command c) noexcept;
std::optional<Command> parse_command(std::string_view name) noexcept;

/// Tunables. Defaults are overridden by environment variables COR0N4_<NAME>
/// (NAME upper-cased), which are overridden by the job's "params" object.
struct Params {
  double residual_tol = 1e-9;
  double root_margin = kDefaultRootMargin;
  int grid = 4096;             // circle resolution for certified sup bounds
  std::uint64_t seed = kDefaultSeed;
  double quad_tol = 1e-6;      // relative quadrature tolerance
  int max_degree = 24;         // reducer degree budget
  int max_iters = 20000;       // random-search budget
  int trial_degree = 4;        // multiplier lower-bound trial space
  int degree_cap = -1;         // Bezout base degree cap, <0 for the default
  int radii = 16;              // grid-export radii, >= 2
  int angles = 64;             // grid-export angles, >= 1
};

/// Names accepted in "params" and, upper-cased with the COR0N4_ prefix, in
/// the environment.
const std::vector<std::string>& param_names();

struct Inputs {
  std::optional<Polynomial> polynomial;
  std::optional<Polynomial> f;
  std::optional<Polynomial> h;
  std::optional<FunctionTuple> tuple;
  std::optional<FunctionTuple> solution;
  std::optional<AtomicMeasure> measure;
  std::optional<UnitCirclePoint> zeta;
  std::optional<Eigen::VectorXcd> a;
  std::optional<Eigen::VectorXcd> d;
};

struct JobSpec {
  Command command = Command::Norm;
  Inputs inputs;
  Params params;
};

/// Reads an environment variable; returns nullopt if unset.
using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;
EnvLookup process_env();

/// Parses {"command", "inputs", "params"}. Unknown keys at any level are
/// rejected. Throws Error with an input-layer code (MalformedJson, OffCircle,
/// NonpositiveWeight, DuplicateAtom, UnknownKey, MissingField, InvalidParam,
/// UnknownCommand).
JobSpec parse_input(std::string_view text, const EnvLookup& env = process_env());

/// Canonical JSON text of a job: sorted keys, every param present.
std::string serialize(const JobSpec& job);

nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const FunctionTuple& t);
nlohmann::json to_json(const AtomicMeasure& mu);
nlohmann::json to_json(Complex z);
Polynomial polynomial_from_json(const nlohmann::json& j);
FunctionTuple tuple_from_json(const nlohmann::json& j);
AtomicMeasure measure_from_json(const nlohmann::json& j);

enum class Status { Pass, Fail, Inconclusive };

std::string_view to_string(Status s) noexcept;

struct Report {
  Command command = Command::Norm;
  Status status = Status::Pass;
  std::vector<CheckItem> items;
  nlohmann::json artifacts = nlohmann::json::object();
};

/// Exit codes of the command-line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitInputError = 3;

int exit_code(Status s) noexcept;

/// Runs a job. Module preconditions that the input violates (common zero in
/// the disk, pair not unimodular) give FAIL; NOT_FOUND, APPROX solutions and
/// quadrature cap hits give INCONCLUSIVE. A grid-export job stores its CSV in
/// artifacts["csv"].
Report run(const JobSpec& job);

nlohmann::json to_json(const Report& r);

/// Rows "r,theta,re_z,im_z,sum_sq" (plus "abs_b<j>" columns when a solution
/// is given), r-major, radii k/(radii - 1), angles 2 pi l / angles.
std::string grid_export(const FunctionTuple& phi, int radii, int angles = 64,
                        const std::optional<FunctionTuple>& solution = std::nullopt);

/// Shortest round-trip decimal form of x.
std::string format_double(double x);

}  // namespace dmu::cli

#endif
