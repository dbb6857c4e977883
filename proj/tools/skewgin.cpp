#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "skewgin/commands.hpp"

namespace {

using skewgin::CommandOptions;
using skewgin::CommandResult;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw skewgin::Error(skewgin::ErrorCode::ParseError, "cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const CommandResult& r) {
  std::cout << skewgin::dump_report(r.report);
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ginzburg algebras, crossed products and Morita reduction of quivers with potential"};
  app.set_version_flag("--version", std::string(skewgin::kToolVersion));
  app.require_subcommand(1);

  std::string input;
  std::string matrices_path;
  CommandOptions opt;
  std::size_t max_len = 0, filtration = 0, cap = 0, weyl_n = 0;
  int d = 0;

  auto add_input = [&](CLI::App* sub) { sub->add_option("file", input, "problem document (default: standard input)"); };

  auto* validate = app.add_subcommand("validate", "parse the document and check the group data");
  add_input(validate);

  auto* ginzburg = app.add_subcommand("ginzburg", "print the Ginzburg presentation");
  add_input(ginzburg);
  auto* d_opt = ginzburg->add_option("--d", d, "Calabi-Yau dimension (at least 3)");
  ginzburg->add_flag("--check", opt.check, "evaluate d^2 on every generator");

  auto* invariance = app.add_subcommand("invariance", "check W is fixed and d is equivariant");
  add_input(invariance);
  auto* inv_d = invariance->add_option("--d", d, "Calabi-Yau dimension (at least 3)");

  auto* reduce = app.add_subcommand("reduce", "build the reduced quiver and transport W");
  add_input(reduce);
  auto* reduce_len = reduce->add_option("--max-len", max_len, "longest path checked by the embedding");

  auto* transport = app.add_subcommand("transport", "transport W with its commutator certificate");
  add_input(transport);

  auto* verify = app.add_subcommand("verify", "run the embedding and dimension checks");
  add_input(verify);
  auto* verify_len = verify->add_option("--max-len", max_len, "longest path length compared");

  auto* weyl = app.add_subcommand("weyl", "bounded exactness of the Koszul resolution of the Weyl algebra");
  add_input(weyl);
  auto* n_opt = weyl->add_option("--n", weyl_n, "number of variable pairs");
  auto* filt_opt = weyl->add_option("--filtration", filtration, "Bernstein filtration bound");
  auto* cap_opt = weyl->add_option("--cap", cap, "largest truncation size allowed");
  weyl->add_option("--matrices", matrices_path, "JSON file with symplectic matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : skewgin::kExitInputError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  std::string command = chosen->get_name();
  if (d_opt->count() || inv_d->count()) opt.cy_dimension = d;
  if (reduce_len->count() || verify_len->count()) opt.max_len = max_len;
  if (n_opt->count()) opt.weyl_n = weyl_n;
  if (filt_opt->count()) opt.filtration = filtration;
  if (cap_opt->count()) opt.cap = cap;

  try {
    if (!matrices_path.empty()) {
      try {
        opt.matrices = nlohmann::json::parse(read_input(matrices_path));
      } catch (const nlohmann::json::parse_error& e) {
        throw skewgin::DocumentError(skewgin::ErrorCode::ParseError, {{"", e.what()}});
      }
    }
    skewgin::ProblemDocument doc;
    bool stdin_weyl = command == "weyl" && input.empty();
    if (!stdin_weyl) doc = skewgin::parse_document(read_input(input));
    return emit(skewgin::run(command, doc, opt));
  } catch (const skewgin::Error& e) {
    return emit(skewgin::error_result(command, e));
  }
}
