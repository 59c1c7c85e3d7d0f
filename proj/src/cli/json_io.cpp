#include <charconv>
#include <cmath>

#include "dmu/cli.hpp"

namespace dmu::cli {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedJson, what); }

void only_keys(const json& j, std::initializer_list<std::string_view> allowed, const std::string& where) {
  if (!j.is_object()) malformed(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw Error(ErrorCode::UnknownKey, "unknown key '" + key + "' in " + where);
  }
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::MissingField, where + " needs '" + key + "'");
  return *it;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) malformed(where + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) malformed(where + " must be finite");
  return x;
}

Complex complex_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) malformed(where + " must be a [re, im] pair");
  return {number(j[0], where), number(j[1], where)};
}

}  // namespace

std::string format_double(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const Polynomial& p) {
  json coeffs = json::array();
  for (Eigen::Index k = 0; k < p.size(); ++k) coeffs.push_back(to_json(p.coeffs()[k]));
  return {{"coeffs", coeffs}};
}

json to_json(const FunctionTuple& t) {
  json entries = json::array();
  for (const auto& p : t) entries.push_back(to_json(p));
  return {{"entries", entries}};
}

json to_json(const AtomicMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu) atoms.push_back({{"zeta", to_json(a.zeta.value())}, {"weight", a.weight}});
  return {{"atoms", atoms}};
}

Polynomial polynomial_from_json(const json& j) {
  only_keys(j, {"coeffs"}, "polynomial");
  const json& coeffs = field(j, "coeffs", "polynomial");
  if (!coeffs.is_array()) malformed("polynomial coeffs must be an array");
  Eigen::VectorXcd c(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) c[Eigen::Index(k)] = complex_from_json(coeffs[k], "coefficient");
  return Polynomial(c);
}

FunctionTuple tuple_from_json(const json& j) {
  only_keys(j, {"entries"}, "tuple");
  const json& entries = field(j, "entries", "tuple");
  if (!entries.is_array() || entries.empty()) malformed("tuple entries must be a nonempty array");
  std::vector<Polynomial> out;
  for (const auto& e : entries) out.push_back(polynomial_from_json(e));
  return FunctionTuple(std::move(out));
}

AtomicMeasure measure_from_json(const json& j) {
  only_keys(j, {"atoms"}, "measure");
  const json& atoms = field(j, "atoms", "measure");
  if (!atoms.is_array()) malformed("measure atoms must be an array");
  std::vector<Atom> out;
  for (const auto& a : atoms) {
    only_keys(a, {"zeta", "weight"}, "atom");
    const Complex z = complex_from_json(field(a, "zeta", "atom"), "zeta");
    const double w = number(field(a, "weight", "atom"), "weight");
    out.push_back({UnitCirclePoint(z, 1e-6), w});
  }
  return AtomicMeasure(std::move(out));
}

}  // namespace dmu::cli
