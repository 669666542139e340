#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "fixtures.hpp"
#include "schur_scope/serialize.hpp"
#include "svg.hpp"

using namespace schur_scope;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(SCHUR_SCOPE_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("schur_scope_test_" + name);
}

}  // namespace

TEST_CASE("fixtures reproduce byte for byte") {
  for (const auto& name : cli::fixture_names()) {
    const auto outcome = cli::reproduce_fixture(name);
    CHECK_MESSAGE(outcome.diff.empty(), name);
    CHECK(outcome.report == cli::expected_fixture(name));
    const auto r = run({"repro", name});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == golden("repro-" + name + ".txt"));
  }
  const auto r = run({"repro", "example-9.9"});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("unknown-name") != std::string::npos);
}

TEST_CASE("the negative-root case of the first fixture") {
  const auto text = cli::compute_fixture("example-2.6");
  CHECK(text.find("s_2s_3α_3 = -α_γ: yes") != std::string::npos);
  CHECK(text.find("canonical -(2|3), sign -1") != std::string::npos);
}

TEST_CASE("svg rendering is stable") {
  const auto a3 = preset("A3");
  CHECK(cli::render_curve_svg(parse_curve("", 2), a3) == golden("curve-fan-2.svg"));
  CHECK(cli::render_curve_svg(parse_curve("2", 3), a3) == golden("curve-2-3.svg"));
  CHECK(cli::render_curve_svg(parse_curve("2", 3, true), a3) == golden("curve-neg-2-3.svg"));
  CHECK(cli::render_curve_svg(parse_curve("2,1", 3), preset("universal:3:2")) == golden("curve-2-1-3.svg"));
  CHECK(cli::root_expression(parse_curve("", 2)) == "α_2");
  CHECK(cli::root_expression(parse_curve("2", 3)) == "s_2α_3");
  CHECK(cli::root_expression(parse_curve("2", 3, true)) == "-s_2α_3");
  CHECK(cli::loop_expression(LoopWord{}) == "e");
  CHECK(golden("curve-2-3.svg").find("schematic") != std::string::npos);

  const auto path = scratch("render.svg");
  const auto r = run({"--type", "A3", "curve", "render", "--word", "2", "--end", "3", "--out", path.string()});
  CHECK(r.code == cli::kOk);
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  CHECK(s.str() == golden("curve-2-3.svg"));
  std::filesystem::remove(path);
  CHECK(run({"--type", "A3", "curve", "render", "--word", "2", "--end", "3", "--out", "/nonexistent/dir/x.svg"})
            .code == cli::kUsage);
}

TEST_CASE("commands agree with the core") {
  CHECK(run({"--type", "A3", "orbit", "count"}).out == "16\n");
  CHECK(run({"--type", "A3", "orbit", "count"}).code == cli::kOk);
  for (const char* name : {"A2", "B2", "G2", "B3"}) {
    const auto orbit = hurwitz_orbit(canonical_factorization(Orientation(preset(name))), 1'000'000);
    CHECK(run({"--type", name, "orbit", "count"}).out == std::to_string(orbit.members.size()) + "\n");
  }

  const auto check = run({"--type", "A2", "schur", "check", "--root", "1,1"});
  CHECK(check.code == cli::kOk);
  CHECK(check.out.rfind("Yes\n", 0) == 0);
  const auto json = run({"--type", "A2", "--json", "schur", "check", "--root", "1,1"});
  CHECK(parse_json<SchurVerdict>(json.out) == is_schur_root(RootVector{1, 1}, Orientation(preset("A2"))));

  const auto simple = run({"--type", "universal:3:2", "curve", "simple", "--word", "2", "--end", "3"});
  CHECK(simple.code == cli::kOk);
  CHECK(simple.out.rfind("Yes\ncertificate: ", 0) == 0);
  const auto bounded = run({"--type", "universal:3:2", "curve", "simple", "--word", "2,1", "--end", "3"});
  CHECK(bounded.code == cli::kUndecided);
  CHECK(bounded.out == "No-within-bound\n");

  const auto root = run({"--type", "A3", "--json", "curve", "root", "--word", "2", "--end", "3", "--neg"});
  CHECK(root.code == cli::kOk);
  CHECK(root.out.find("[\n") != std::string::npos);

  const Orientation a3(preset("A3"));
  const auto verify = run({"--type", "A3", "--json", "schur", "verify", "--height", "10"});
  CHECK(verify.code == cli::kOk);
  CHECK(parse_json<ConjectureReport>(verify.out) == verify_conjecture(a3, 10));

  const auto nc = run({"--type", "A3", "--json", "nc", "list"});
  const auto nc_doc = nlohmann::json::parse(nc.out);
  CHECK(parse_json<NCPoset>(nc_doc.at("poset").dump()) == enumerate_nc(a3));
  CHECK(parse_json<PosetProperties>(nc_doc.at("properties").dump()) == poset_properties(enumerate_nc(a3)));
  CHECK(run({"--type", "A3", "nc", "leq", "--u", "1", "--w", "c"}).out == "Yes\n");
  CHECK(run({"--type", "A3", "nc", "leq", "--u", "c", "--w", "1"}).out == "No\n");

  const auto mutated = run({"--type", "A3", "--json", "mutate", "source", "--root", "0,1,1"});
  CHECK(mutated.code == cli::kOk);

  const auto order = run({"--type", "A3", "--order", "2,3,1", "--json", "schur", "verify", "--height", "6"});
  CHECK(parse_json<ConjectureReport>(order.out) ==
        verify_conjecture(Orientation(preset("A3"), parse_order("2,3,1", 3)), 6));
}

TEST_CASE("undecided results exit with 2") {
  CHECK(run({"--type", "universal:3:2", "--orbit-cap", "100", "orbit", "count"}).code == cli::kUndecided);
  CHECK(run({"--type", "universal:2:2", "group", "order"}).out.rfind("infinite", 0) == 0);
  CHECK(run({"--type", "F4", "group", "order"}).out == "1152\n");
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"--type", "Z9", "roots", "list"}).code == cli::kUsage);
  CHECK(run({"--type", "A2", "schur", "check", "--root", "2,1"}).code == cli::kUsage);
  CHECK(run({"--type", "A2", "schur", "check"}).code == cli::kUsage);
  CHECK(run({"--type", "A2", "frobnicate"}).code == cli::kUsage);
  CHECK(run({"--type", "A2", "--order", "1,1", "orbit", "count"}).code == cli::kUsage);
  CHECK(run({"--type", "A3", "braid", "apply", "--word", "3"}).code == cli::kUsage);
  CHECK(run({"--type", "A2", "--cartan", "x", "roots", "list"}).code == cli::kUsage);
  const auto r = run({"--type", "A2", "schur", "check", "--root", "2,1"});
  CHECK(r.err.rfind("error (not-real-root)", 0) == 0);
}

TEST_CASE("cartan files and the caps variable") {
  const auto path = scratch("cartan.txt");
  {
    std::ofstream out(path);
    out << "2\n2 -1\n-1 2\n";
  }
  CHECK(run({"--cartan", path.string(), "orbit", "count"}).out == "3\n");
  std::filesystem::remove(path);

  ::setenv("SCHUR_SCOPE_CAPS", "orbit=50,height=3", 1);
  CHECK(run({"--type", "universal:3:2", "orbit", "count"}).out.rfind(">= 50", 0) == 0);
  // Explicit flags win over the variable.
  CHECK(run({"--type", "universal:3:2", "--orbit-cap", "20", "orbit", "count"}).out.rfind(">= 20", 0) == 0);
  ::setenv("SCHUR_SCOPE_CAPS", "orbit=zero", 1);
  CHECK(run({"--type", "A2", "orbit", "count"}).code == cli::kUsage);
  ::unsetenv("SCHUR_SCOPE_CAPS");
}
