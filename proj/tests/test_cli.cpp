#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rnf/cli.hpp"
#include "rnf/json_io.hpp"
#include "rnf/random_jets.hpp"
#include "support.hpp"

using namespace rnf;
using nlohmann::json;
using test::j1;
using test::q;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("rnf_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

struct Result {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("invariants of a contact form") {
    TempDir dir;
    const auto path = dir.write("c.json", R"({"theta":{"order":3,"coeffs":["1","1","2"]}})");
    const Result r = call({"invariants", "--contact", path});
    CHECK(r.code == 0);
    const json j = r.report();
    CHECK(j["status"] == "ok");
    CHECK(j["invariants"]["anosov_class"] == "-4");
    CHECK(j["invariants"]["fh_class"] == "0");
    CHECK(jet1_from_json(j["invariants"]["roof"]) == j1(3, {"1", "0", "-2"}));
  }

  TEST_CASE("invariants of a resonance field") {
    TempDir dir;
    const auto path = dir.write("v.json", R"({"f":{"order":2,"coeffs":["1","1"]},"g":{"order":2,"coeffs":["1","3"]}})");
    const Result r = call({"invariants", "--vf", path});
    CHECK(r.code == 0);
    CHECK(r.report()["invariants"]["fh_class"] == "1");
    CHECK(r.report()["invariants"]["anosov_class"] == "-3");
  }

  TEST_CASE("normalize-map recovers omega") {
    TempDir dir;
    const auto path = dir.write("m.json", to_json(test::example_map(5)).dump());
    const Result r = call({"normalize-map", "--map", path});
    CHECK(r.code == 0);
    const json j = r.report();
    CHECK(j["lambda"] == "2");
    CHECK(jet1_from_json(j["omega"]) == j1(2, {"1", "1/2"}));
    CHECK(j["anosov_class"] == "-1/2");
    for (const auto& c : j["checks"]) CHECK(c["pass"] == true);
  }

  TEST_CASE("centralizer reports infeasibility with exit 1") {
    TempDir dir;
    const auto path = dir.write("m.json", to_json(test::example_map(5)).dump());
    const Result r = call({"centralizer", "--map", path, "--det", "1/2"});
    CHECK(r.code == 1);
    CHECK(r.report()["status"] == "infeasible");
    CHECK(r.err.find("infeasible at degree ≤ 3") != std::string::npos);
    CHECK(call({"centralizer", "--map", path, "--det", "1"}).code == 0);
  }

  TEST_CASE("verify runs all exact suites") {
    const Result r = call({"--order", "6", "verify", "--all", "--samples", "3"});
    CHECK(r.code == 0);
    const json j = r.report();
    CHECK(j["status"] == "ok");
    CHECK(j["checks"].size() >= 10);
    CHECK(call({"verify", "--suite", "no-such-suite"}).code == 2);
  }

  TEST_CASE("verify numeric suites") {
    const Result r = call({"--order", "8", "verify", "--numeric", "--suite", "flow", "--suite", "sl2", "--samples", "2"});
    CHECK(r.code == 0);
  }

  TEST_CASE("schema errors carry a pointer") {
    TempDir dir;
    const auto path = dir.write("c.json", R"({"theta":{"order":3,"coeffs":["1","x"]}})");
    const Result r = call({"invariants", "--contact", path});
    CHECK(r.code == 2);
    const json j = r.report();
    CHECK(j["status"] == "error");
    CHECK(j["pointer"] == "/theta/coeffs/1");
    CHECK_FALSE(r.err.empty());
  }

  TEST_CASE("floats are rejected in exact mode") {
    TempDir dir;
    const auto path = dir.write("c.json", R"({"theta":{"order":2,"coeffs":[1.5,1]}})");
    CHECK(call({"invariants", "--contact", path}).code == 2);
    CHECK(call({"--mode", "numeric", "invariants", "--contact", path}).code == 0);
  }

  TEST_CASE("bad command lines exit 2") {
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"invariants", "--contact", "/nonexistent/file.json"}).code == 2);
    CHECK(call({"--order", "1", "verify"}).code == 2);
    TempDir dir;
    const auto path = dir.write("c.json", R"({"theta":{"order":2,"coeffs":["-1","1"]}})");
    CHECK(call({"invariants", "--contact", path}).code == 2);
  }

  TEST_CASE("demo sl2") {
    const Result r = call({"demo", "sl2", "--samples", "20"});
    CHECK(r.code == 0);
    CHECK(r.report()["max_entry_error"].get<double>() < 1e-12);
    CHECK(r.report()["constant_roof"] == true);
  }

  TEST_CASE("property: JSON round trips") {
    Rng rng(61);
    for (int s = 0; s < 10; ++s) {
      const Jet1 a = random_jet1(rng, 5);
      CHECK(jet1_from_json(to_json(a)) == a);
      const Jet2 b = random_jet2(rng, 5);
      CHECK(jet2_from_json(to_json(b)) == b);
      const MapJet2 m = random_symplectic(rng, 4);
      CHECK(map_from_json(to_json(m)) == m);
      const ResMap f = random_resmap(rng, q("2"), 3);
      CHECK(resmap_from_json(to_json(f)) == f);
      const ResVF v = random_resvf(rng, 4);
      CHECK(resvf_from_json(to_json(v)) == v);
      const ContactNF c = random_contact(rng, 4);
      CHECK(contact_from_json(to_json(c)) == c);
    }
  }
}
