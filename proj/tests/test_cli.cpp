#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "arideal/cli.hpp"
#include "support.hpp"

using namespace arideal;
using namespace testing_support;
using arideal::cli::run;

namespace {

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("arideal_test_" + name);
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("detect-ar on the eps ideal says YES", "[cli]") {
  auto r = run({"detect-ar", fixture("lhat2.bundle"), "--ideal", "eps"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "AR ideal: YES");
}

TEST_CASE("detect-ar on the eps^2 ideal says NO with a witness", "[cli]") {
  auto r = run({"detect-ar", fixture("lhat2.bundle"), "--ideal", "eps2"});
  CHECK(r.code == 1);
  CHECK(first_line(r.out).rfind("AR ideal: NO; witness: ", 0) == 0);
  CHECK(first_line(r.out) == "AR ideal: NO; witness: [alpha; alpha*eps] at X (source not sink)");
  CHECK(r.out.find("(sink not source): [beta, eps*beta]") != std::string::npos);
}

TEST_CASE("quiver --format dot carries the valued arrows", "[cli]") {
  auto r = run({"quiver", fixture("lhat2.bundle"), "--ideal", "eps", "--format", "dot"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"X\" -> \"X\" [label=\"(1,1)\"]") != std::string::npos);
  CHECK(r.out.find("\"X\" -> \"Y\" [label=\"(0,1)\"]") != std::string::npos);
  CHECK(r.out.find("\"Y\" -> \"X\" [label=\"(1,0)\"]") != std::string::npos);
}

TEST_CASE("quiver --format json mirrors the DOT arrows", "[cli]") {
  auto r = run({"quiver", fixture("lhat2.bundle"), "--ideal", "eps", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["arrows"].size() == 3);
  CHECK(j["arrows"][0]["value"] == nlohmann::json::array({1, 1}));
  CHECK(j["tau_I"].size() == 2);
}

TEST_CASE("every fixture loads and validates", "[cli]") {
  for (const auto* f : {"lhat2.bundle", "lhat3.bundle", "clusterA4.bundle"}) {
    auto r = run({"validate", fixture(f)});
    INFO(r.out << r.err);
    CHECK(r.code == 0);
    CHECK(r.out.find("\nvalid\n") != std::string::npos);
  }
  CHECK(run({"validate", fixture("clusterA4.bundle")}).out.find("14 indecomposables") != std::string::npos);
}

TEST_CASE("lhat3's mutation triangles verify through the CLI", "[cli]") {
  auto r = run({"verify-triangles", fixture("lhat3.bundle"), "--ideal", "eps", "--multiplicity"});
  INFO(r.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("all triangles verify") != std::string::npos);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
}

TEST_CASE("the remaining subcommands run", "[cli]") {
  const auto b = fixture("lhat2.bundle");
  auto dims = run({"ideal", b, "--name", "eps", "--dims"});
  CHECK(dims.code == 0);
  CHECK(dims.out.find("X -> X: 3") != std::string::npos);
  auto gh = run({"ghost", b, "--ideal", "eps"});
  CHECK(gh.out.find("Gh of eps (dimension 4)") != std::string::npos);
  auto cogh = run({"ghost", b, "--ideal", "eps", "--co"});
  CHECK(cogh.out.find("CoGh of eps (dimension 4)") != std::string::npos);
  auto ap = run({"approx", b, "--ideal", "eps", "--object", "Y", "--side", "right", "--minimal"});
  CHECK(ap.code == 0);
  CHECK(ap.out.find("map: alpha*eps") != std::string::npos);
  auto al = run({"approx", b, "--ideal", "eps", "--object", "X+Y", "--side", "left"});
  CHECK(al.code == 0);
  auto rad = run({"radical", b});
  CHECK(rad.out.find("Jacobson radical (dimension 8)") != std::string::npos);
}

TEST_CASE("output is byte-deterministic", "[cli]") {
  const std::vector<std::string> args{"quiver", fixture("clusterA4.bundle"), "--ideal", "D", "--format", "json"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> basis{"ideal", fixture("lhat3.bundle"), "--name", "eps", "--basis"};
  CHECK(run(basis).out == run(basis).out);
}

TEST_CASE("ideal --basis output regenerates the same ideal", "[cli]") {
  for (const auto& [f, name] : {std::pair{"lhat2", "eps"}, std::pair{"lhat2", "eps2"}, std::pair{"lhat2", "J"},
                                std::pair{"lhat3", "eps"}, std::pair{"lhat3", "J"}, std::pair{"clusterA4", "D"}}) {
    auto r = run({"ideal", fixture(std::string(f) + ".bundle"), "--name", name, "--basis"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    const auto& b = bundle(f);
    std::vector<Morphism<Rationals>> gens;
    for (const auto& [pair, comp] : j["components"].items())
      for (const auto& e : comp["exprs"]) gens.push_back(mor(b, e.get<std::string>()));
    CHECK(generate_ideal(b.cat(), gens) == b.ideal(name));
  }
}

TEST_CASE("input errors exit with code 2", "[cli]") {
  CHECK(run({"validate", fixture("missing.bundle")}).code == 2);
  CHECK(run({"frobnicate", fixture("lhat2.bundle")}).code == 2);
  CHECK(run({"detect-ar", fixture("lhat2.bundle")}).code == 2);
  CHECK(run({"detect-ar", fixture("lhat2.bundle"), "--ideal", "nope"}).code == 2);
  CHECK(run({"approx", fixture("lhat2.bundle"), "--ideal", "eps", "--object", "W"}).code == 2);
  CHECK(run({"quiver", fixture("lhat2.bundle"), "--ideal", "eps", "--format", "png"}).code == 2);
  auto bad = write_temp("bad.bundle", "[vertices]\nX\n[arrows]\nf: X -> Q\n");
  auto r = run({"validate", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 4") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("a category that fails validation exits 1 from validate", "[cli]") {
  auto text = std::string("[vertices]\nX\n[arrows]\ne: X -> X\n[options]\nmax_path_length = 3\n") +
              "[functor shift]\nX -> X\ne -> 2*e\n[relations]\ne*e\n";
  auto ok = write_temp("scaled.bundle", text);
  CHECK(run({"validate", ok.string()}).code == 0);  // scaling respects e*e = 0
  auto broken = write_temp("broken.bundle", "[vertices]\nX Y\n[arrows]\neps: X -> X\nalpha: X -> Y\nbeta: Y -> X\n"
                                            "[relations]\nalpha*beta\neps*eps + beta*alpha\n"
                                            "[options]\nmax_path_length = 5\n[functor shift]\nX -> X\nY -> Y\n"
                                            "eps -> eps\nalpha -> alpha\nbeta -> 2*beta\n");
  auto r = run({"validate", broken.string()});
  INFO(r.out << r.err);
  CHECK(r.code == 1);
  CHECK(r.out.rfind("invalid: ", 0) == 0);
  CHECK(run({"radical", broken.string()}).code == 2);
}
