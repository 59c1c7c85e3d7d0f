#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "dmu/cli.hpp"

namespace {

void print_error(const dmu::Error& e) {
  const nlohmann::json out{{"status", "ERROR"}, {"error", std::string(dmu::to_string(e.code()))}, {"message", e.what()}};
  std::cout << out.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirichlet-type space toolkit: norms, corona solutions, stable-rank reductions"};
  std::string input = "-";
  std::string csv_path;
  app.add_option("input", input, "JSON job file, or - for stdin");
  app.add_option("--csv", csv_path, "write the grid-export CSV to this file");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : dmu::cli::kExitInputError;
  }

  std::string text;
  if (input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(input, std::ios::binary);
    if (!in) {
      print_error(dmu::Error(dmu::ErrorCode::InvalidArgument, "cannot read " + input));
      return dmu::cli::kExitInputError;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  try {
    const auto job = dmu::cli::parse_input(text);
    auto report = dmu::cli::run(job);
    if (!csv_path.empty() && report.artifacts.contains("csv")) {
      std::ofstream out(csv_path, std::ios::binary);
      if (!out) throw dmu::Error(dmu::ErrorCode::InvalidArgument, "cannot write " + csv_path);
      out << report.artifacts["csv"].get<std::string>();
      report.artifacts.erase("csv");
      report.artifacts["csv_file"] = csv_path;
    }
    std::cout << dmu::cli::to_json(report).dump(2) << '\n';
    return dmu::cli::exit_code(report.status);
  } catch (const dmu::Error& e) {
    print_error(e);
    return dmu::cli::kExitInputError;
  }
}
