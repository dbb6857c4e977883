#include <doctest.h>

#include <fstream>
#include <sstream>

#include "skewgin/commands.hpp"

using namespace skewgin;
using nlohmann::json;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(SKEWGIN_DATA_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<DocumentIssue> issues_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    return e.issues();
  }
  return {};
}

bool has_pointer(const std::vector<DocumentIssue>& issues, const std::string& ptr) {
  for (const auto& i : issues) {
    if (i.pointer == ptr) return true;
  }
  return false;
}

CommandResult run_file(const std::string& command, const std::string& name, CommandOptions opt = {}) {
  return run(command, parse_document(slurp(name)), opt);
}

}  // namespace

TEST_SUITE("cli_frontend") {
  TEST_CASE("minimal document") {
    auto doc = parse_document(slurp("minimal.json"));
    CHECK(doc.quiver->vertex_count() == 1);
    auto r = run("validate", doc, {});
    CHECK(r.exit_code == 0);
    CHECK(r.report["version"] == std::string(kToolVersion));
  }

  TEST_CASE("positioned validation errors") {
    auto unknown = issues_of(R"J({"field": "Q", "quiver": {"vertices": ["v"], "arrows": [{"name": "x", "src": "v", "tgt": "v"}]},
                                 "potential": [{"coeff": "1", "cycle": ["q"]}]})J");
    CHECK(has_pointer(unknown, "/potential/0/cycle/0"));
    auto gf6 = issues_of(R"J({"field": "GF(6)", "quiver": {"vertices": ["v"], "arrows": []}})J");
    CHECK(has_pointer(gf6, "/field"));
    auto not_cycle = issues_of(R"J({"quiver": {"vertices": ["1", "2"], "arrows": [{"name": "a", "src": "1", "tgt": "2"}]},
                                   "potential": [{"coeff": "1", "cycle": ["a"]}]})J");
    CHECK(has_pointer(not_cycle, "/potential/0/cycle"));
    auto bad_vertex = issues_of(R"J({"quiver": {"vertices": ["v"], "arrows": [{"name": "x", "src": "v", "tgt": "w"}]}})J");
    CHECK(has_pointer(bad_vertex, "/quiver/arrows/0/tgt"));
    auto bad_table = issues_of(R"J({"quiver": {"vertices": ["v"], "arrows": []},
                                   "group": {"elements": ["1", "g"], "table": [[0, 1], [1, 1]]}})J");
    CHECK(has_pointer(bad_table, "/group/table"));
    auto typo = issues_of(R"J({"quiver": {"vertices": ["v"], "arrows": []}, "potentail": []})J");
    CHECK(has_pointer(typo, "/potentail"));
    auto matrix = issues_of(R"J({"quiver": {"vertices": ["v"], "arrows": [{"name": "x", "src": "v", "tgt": "v"}]},
                                "group": {"elements": ["1", "g"], "table": [[0, 1], [1, 0]]},
                                "action": {"g": {"arrow_matrices": {"(v,v)": [["1", "2"]]}}}})J");
    CHECK(has_pointer(matrix, "/action/g"));
    auto scalar = issues_of(R"J({"field": "GF(7)", "quiver": {"vertices": ["v"], "arrows": [{"name": "x", "src": "v", "tgt": "v"}]},
                                "potential": [{"coeff": "1/7", "cycle": ["x"]}]})J");
    CHECK(has_pointer(scalar, "/potential/0/coeff"));
  }

  TEST_CASE("malformed JSON") {
    try {
      parse_document(std::string("{\"field\": "));
      FAIL("expected ParseError");
    } catch (const DocumentError& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }

  TEST_CASE("idempotent support must fix the vertex") {
    json doc = json::parse(slurp("swap_z2.json"));
    doc["idempotents"] = json::parse(R"J([{"vertex": "1", "elements": [["1/2", "1/2"]], "dims": [1]}])J");
    try {
      parse_document(doc);
      FAIL("expected ValidationError");
    } catch (const DocumentError& e) {
      CHECK(has_pointer(e.issues(), "/idempotents/0/elements/0/1"));
    }
  }

  TEST_CASE("verify on the McKay document") {
    auto r = run_file("verify", "mckay_z3.json");
    CHECK(r.exit_code == 0);
    REQUIRE(r.report["dimension_table"].size() == 5);
    CHECK(r.report["dimension_table"][4]["corner"] == 45);
    CHECK(r.report["orbits"][0]["representative"] == "v");
    CHECK(r.report["reduced_quiver"]["arrows"].size() == 9);
    CHECK(r.report["transport"]["class_verified"] == true);
  }

  TEST_CASE("corrupted differential") {
    CommandOptions opt;
    opt.check = true;
    auto r = run_file("ginzburg", "corrupted_differential.json", opt);
    CHECK(r.exit_code == 1);
    REQUIRE(r.report["check"]["violations"].size() == 1);
    CHECK(r.report["check"]["violations"][0]["generator"] == "c_v");
    CHECK(r.report["check"]["violations"][0]["pointer"] == "/differential_overrides/0");
    CHECK(run_file("ginzburg", "mckay_z3.json", opt).exit_code == 0);
  }

  TEST_CASE("override naming an unknown generator") {
    json doc = json::parse(slurp("corrupted_differential.json"));
    doc["differential_overrides"][0]["generator"] = "w*";
    auto r = run("ginzburg", parse_document(doc), {});
    CHECK(r.exit_code == 2);
    CHECK(r.report["error"]["issues"][0]["pointer"] == "/differential_overrides/0/generator");
  }

  TEST_CASE("negative controls") {
    auto inv = run_file("invariance", "non_invariant.json");
    CHECK(inv.exit_code == 1);
    CHECK(inv.report["images"][1]["pointer"] == "/potential");
    auto transport = run_file("transport", "non_invariant.json");
    CHECK(transport.exit_code == 1);
    CHECK(transport.report["error"]["code"] == "NotInvariantPotential");
    auto perturbed = run_file("verify", "perturbed_reduced.json");
    CHECK(perturbed.exit_code == 1);
    CHECK(perturbed.report["failures"][0]["pointer"] == "/reduced_potential");
    CommandOptions weyl;
    weyl.matrices = json::parse(slurp("non_symplectic.json"));
    auto sp = run("weyl", ProblemDocument{}, weyl);
    CHECK(sp.exit_code == 1);
    CHECK(sp.report["failures"][0]["pointer"] == "/matrices/0");
  }

  TEST_CASE("weyl command") {
    CommandOptions opt;
    opt.weyl_n = 1;
    opt.filtration = 3;
    opt.matrices = json::parse(slurp("symplectic.json"));
    auto r = run("weyl", ProblemDocument{}, opt);
    CHECK(r.exit_code == 0);
    CHECK(r.report["resolution"]["end_homology"] == 10);
    opt.weyl_n = 3;
    opt.matrices.reset();
    auto big = run("weyl", ProblemDocument{}, opt);
    CHECK(big.exit_code == 2);
    CHECK(big.report["error"]["code"] == "SizeGuard");
  }

  TEST_CASE("reports are deterministic") {
    for (const char* command : {"ginzburg", "invariance", "reduce", "transport", "verify"}) {
      auto a = dump_report(run_file(command, "mckay_z3.json").report);
      auto b = dump_report(run_file(command, "mckay_z3.json").report);
      CHECK(a == b);
    }
  }

  TEST_CASE("supplied reduced potential") {
    CHECK(run_file("verify", "mckay_z3_supplied.json").exit_code == 0);
    CHECK(run_file("verify", "s3_idempotents.json").exit_code == 0);
    CHECK(run_file("verify", "swap_z2.json").exit_code == 0);
    CHECK(run_file("verify", "trivial_group.json").exit_code == 0);
    CHECK(run_file("invariance", "doubling_z4.json").exit_code == 0);
  }

  TEST_CASE("unknown command") {
    auto r = run("frobnicate", parse_document(slurp("minimal.json")), {});
    CHECK(r.exit_code == 2);
  }
}
