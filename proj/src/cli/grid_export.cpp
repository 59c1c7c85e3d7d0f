#include <cmath>
#include <numbers>

#include "dmu/cli.hpp"

namespace dmu::cli {

std::string grid_export(const FunctionTuple& phi, int radii, int angles, const std::optional<FunctionTuple>& solution) {
  if (radii < 2) throw Error(ErrorCode::InvalidParam, "grid export needs at least 2 radii");
  if (angles < 1) throw Error(ErrorCode::InvalidParam, "grid export needs at least 1 angle");
  std::string out = "r,theta,re_z,im_z,sum_sq";
  if (solution)
    for (std::size_t j = 0; j < solution->size(); ++j) out += ",abs_b" + std::to_string(j);
  out += '\n';
  for (int k = 0; k < radii; ++k) {
    const double r = double(k) / double(radii - 1);
    for (int l = 0; l < angles; ++l) {
      const double theta = 2.0 * std::numbers::pi * double(l) / double(angles);
      const Complex z = std::polar(r, theta);
      out += format_double(r) + ',' + format_double(theta) + ',' + format_double(z.real()) + ',' +
             format_double(z.imag()) + ',' + format_double(phi.sum_sq(z));
      if (solution)
        for (const auto& b : *solution) out += ',' + format_double(std::abs(eval(b, z)));
      out += '\n';
    }
  }
  return out;
}

}  // namespace dmu::cli
