#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "dmu/cli.hpp"

namespace dmu::cli {

using nlohmann::json;

namespace {

struct CommandName {
  Command command;
  std::string_view name;
};

constexpr CommandName kCommands[] = {
    {Command::Norm, "norm"},     {Command::Ldi, "ldi"},
    {Command::Multnorm, "multnorm"}, {Command::Corona, "corona"},
    {Command::KoszulCheck, "koszul-check"}, {Command::Reduce, "reduce"},
    {Command::VerifySuite, "verify-suite"}, {Command::GridExport, "grid-export"},
};

struct InputRule {
  std::vector<std::string> required;
  std::vector<std::string> optional;
};

InputRule input_rule(Command c) {
  switch (c) {
    case Command::Norm: return {{"measure"}, {"polynomial", "tuple"}};
    case Command::Ldi: return {{"polynomial", "zeta"}, {}};
    case Command::Multnorm: return {{"tuple", "measure"}, {}};
    case Command::Corona: return {{"tuple", "measure"}, {}};
    case Command::KoszulCheck: return {{"a"}, {"d"}};
    case Command::Reduce: return {{"f", "h", "measure"}, {}};
    case Command::VerifySuite: return {{}, {}};
    case Command::GridExport: return {{"tuple"}, {"solution"}};
  }
  return {};
}

[[noreturn]] void invalid_param(const std::string& name, const std::string& why) {
  throw Error(ErrorCode::InvalidParam, "param '" + name + "' " + why);
}

Eigen::VectorXcd vector_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::MalformedJson, where + " must be a nonempty array of [re, im]");
  // A vector is a coefficient list without the polynomial's trailing-zero trim.
  Eigen::VectorXcd v(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    const Polynomial single = polynomial_from_json(json{{"coeffs", json::array({j[k]})}});
    v[Eigen::Index(k)] = single.coeff(0);
  }
  return v;
}

json vector_to_json(const Eigen::VectorXcd& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(to_json(v[k]));
  return out;
}

double parse_real(const std::string& name, const json& j) {
  if (!j.is_number()) invalid_param(name, "must be a number");
  return j.get<double>();
}

std::int64_t parse_integer(const std::string& name, const json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) {
    const double x = j.get<double>();
    if (std::floor(x) == x && std::abs(x) < 9e15) return std::int64_t(x);
  }
  invalid_param(name, "must be an integer");
}

// Environment values are strings; integers accept a 0x prefix.
json env_value(const std::string& name, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  if (name == "seed") {
    const unsigned long long v = std::strtoull(begin, &end, 0);
    if (end == begin || *end != '\0') invalid_param(name, "environment value '" + text + "' is not an integer");
    return json(std::uint64_t(v));
  }
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') invalid_param(name, "environment value '" + text + "' is not a number");
  return json(v);
}

void set_param(Params& p, const std::string& name, const json& j) {
  auto positive_real = [&](double& out) {
    const double v = parse_real(name, j);
    if (!(v > 0.0) || !std::isfinite(v)) invalid_param(name, "must be positive");
    out = v;
  };
  auto bounded_int = [&](int& out, std::int64_t lo, std::int64_t hi) {
    const std::int64_t v = parse_integer(name, j);
    if (v < lo || v > hi) invalid_param(name, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    out = int(v);
  };
  if (name == "residual_tol") positive_real(p.residual_tol);
  else if (name == "root_margin") positive_real(p.root_margin);
  else if (name == "quad_tol") positive_real(p.quad_tol);
  else if (name == "grid") bounded_int(p.grid, 1, 1 << 24);
  else if (name == "max_degree") bounded_int(p.max_degree, 0, 256);
  else if (name == "max_iters") bounded_int(p.max_iters, 0, 100000000);
  else if (name == "trial_degree") bounded_int(p.trial_degree, 0, 64);
  else if (name == "degree_cap") bounded_int(p.degree_cap, -1, 512);
  else if (name == "radii") bounded_int(p.radii, 2, 1 << 16);
  else if (name == "angles") bounded_int(p.angles, 1, 1 << 16);
  else if (name == "seed") {
    if (j.is_number_unsigned()) p.seed = j.get<std::uint64_t>();
    else if (j.is_number_integer() && j.get<std::int64_t>() >= 0) p.seed = std::uint64_t(j.get<std::int64_t>());
    else invalid_param(name, "must be a nonnegative integer");
  } else {
    throw Error(ErrorCode::UnknownKey, "unknown param '" + name + "'");
  }
}

json params_to_json(const Params& p) {
  return {{"residual_tol", p.residual_tol}, {"root_margin", p.root_margin}, {"grid", p.grid},
          {"seed", p.seed},                 {"quad_tol", p.quad_tol},       {"max_degree", p.max_degree},
          {"max_iters", p.max_iters},       {"trial_degree", p.trial_degree}, {"degree_cap", p.degree_cap},
          {"radii", p.radii},               {"angles", p.angles}};
}

}  // namespace

std::string_view to_string(Command c) noexcept {
  for (const auto& entry : kCommands)
    if (entry.command == c) return entry.name;
  return "unknown";
}

std::optional<Command> parse_command(std::string_view name) noexcept {
  for (const auto& entry : kCommands)
    if (entry.name == name) return entry.command;
  return std::nullopt;
}

const std::vector<std::string>& param_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    const json defaults = params_to_json(Params{});
    for (const auto& [key, value] : defaults.items()) out.push_back(key);
    return out;
  }();
  return names;
}

EnvLookup process_env() {
  return [](const std::string& name) -> std::optional<std::string> {
    if (const char* v = std::getenv(name.c_str())) return std::string(v);
    return std::nullopt;
  };
}

JobSpec parse_input(std::string_view text, const EnvLookup& env) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedJson, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::MalformedJson, "job must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "command" && key != "inputs" && key != "params")
      throw Error(ErrorCode::UnknownKey, "unknown key '" + key + "' in job");

  JobSpec job;
  const auto cmd = doc.find("command");
  if (cmd == doc.end()) throw Error(ErrorCode::MissingField, "job needs 'command'");
  if (!cmd->is_string()) throw Error(ErrorCode::MalformedJson, "command must be a string");
  const auto parsed = parse_command(cmd->get<std::string>());
  if (!parsed) throw Error(ErrorCode::UnknownCommand, "unknown command '" + cmd->get<std::string>() + "'");
  job.command = *parsed;

  try {
    for (const auto& name : param_names()) {
      std::string upper = "COR0N4_" + name;
      std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
      if (env)
        if (auto value = env(upper)) set_param(job.params, name, env_value(name, *value));
    }
    if (const auto params = doc.find("params"); params != doc.end()) {
      if (!params->is_object()) throw Error(ErrorCode::MalformedJson, "params must be an object");
      for (const auto& [key, value] : params->items()) set_param(job.params, key, value);
    }

    const InputRule rule = input_rule(job.command);
    const json inputs = doc.contains("inputs") ? doc["inputs"] : json::object();
    if (!inputs.is_object()) throw Error(ErrorCode::MalformedJson, "inputs must be an object");
    for (const auto& [key, value] : inputs.items()) {
      const bool known = std::count(rule.required.begin(), rule.required.end(), key) +
                         std::count(rule.optional.begin(), rule.optional.end(), key);
      if (!known)
        throw Error(ErrorCode::UnknownKey,
                    "unknown input '" + key + "' for command '" + std::string(to_string(job.command)) + "'");
    }
    for (const auto& key : rule.required)
      if (!inputs.contains(key))
        throw Error(ErrorCode::MissingField,
                    "command '" + std::string(to_string(job.command)) + "' needs input '" + key + "'");

    Inputs& in = job.inputs;
    for (const auto& [key, value] : inputs.items()) {
      if (key == "polynomial") in.polynomial = polynomial_from_json(value);
      else if (key == "f") in.f = polynomial_from_json(value);
      else if (key == "h") in.h = polynomial_from_json(value);
      else if (key == "tuple") in.tuple = tuple_from_json(value);
      else if (key == "solution") in.solution = tuple_from_json(value);
      else if (key == "measure") in.measure = measure_from_json(value);
      else if (key == "zeta") {
        const Polynomial z = polynomial_from_json(json{{"coeffs", json::array({value})}});
        in.zeta = UnitCirclePoint(z.coeff(0), 1e-6);
      } else if (key == "a") in.a = vector_from_json(value, "a");
      else if (key == "d") in.d = vector_from_json(value, "d");
    }
    if (job.command == Command::Norm && in.polynomial.has_value() == in.tuple.has_value())
      throw Error(ErrorCode::MissingField, "command 'norm' needs exactly one of 'polynomial' and 'tuple'");
    if (in.a && in.d && in.a->size() != in.d->size())
      throw Error(ErrorCode::LengthMismatch, "inputs 'a' and 'd' differ in length");
    if (in.tuple && in.solution && in.tuple->size() != in.solution->size())
      throw Error(ErrorCode::LengthMismatch, "inputs 'tuple' and 'solution' differ in length");
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedJson, std::string("malformed input: ") + e.what());
  }
  return job;
}

std::string serialize(const JobSpec& job) {
  json inputs = json::object();
  const Inputs& in = job.inputs;
  if (in.polynomial) inputs["polynomial"] = to_json(*in.polynomial);
  if (in.f) inputs["f"] = to_json(*in.f);
  if (in.h) inputs["h"] = to_json(*in.h);
  if (in.tuple) inputs["tuple"] = to_json(*in.tuple);
  if (in.solution) inputs["solution"] = to_json(*in.solution);
  if (in.measure) inputs["measure"] = to_json(*in.measure);
  if (in.zeta) inputs["zeta"] = to_json(in.zeta->value());
  if (in.a) inputs["a"] = vector_to_json(*in.a);
  if (in.d) inputs["d"] = vector_to_json(*in.d);
  const json doc{{"command", std::string(to_string(job.command))}, {"inputs", inputs}, {"params", params_to_json(job.params)}};
  return doc.dump();
}

}  // namespace dmu::cli
