#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gammalab/cli.hpp"
#include "gammalab/io.hpp"
#include "instances.hpp"

using namespace gammalab;
namespace fs = std::filesystem;

namespace {

const std::string kDir = GAMMALAB_FIXTURES;

std::string fx(const std::string& name) { return kDir + "/" + name; }

struct Outcome {
  int code = 0;
  std::string out, err;
  Json report() const { return Json::parse(out); }
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string without_timing(const std::string& text) {
  auto j = Json::parse(text);
  j.erase("timing");
  return j.dump(2);
}

fs::path scratch(const std::string& name, const std::string& content) {
  const auto dir = fs::temp_directory_path() / "gammalab_cli_test";
  fs::create_directories(dir);
  const auto p = dir / name;
  std::ofstream(p) << content;
  return p;
}

Json structure_doc() { return semiring_to_json(instances::z5_gamma1()); }

// Every command over the shipped fixtures.
std::vector<std::vector<std::string>> corpus_commands() {
  return {
      {"check-axioms", fx("z5_standard.json")},
      {"check-axioms", fx("z6z4_shifted.json")},
      {"check-axioms", fx("nat_family.json")},
      {"spec", fx("z6_standard.json"), "--list-ideals", "--check-basis"},
      {"localize", fx("z5_standard.json"), "--seed", "2", "--diagnostics"},
      {"localize", fx("z5_gamma1.json"), "--seed", "1,2,3,4"},
      {"localize-module", fx("z6_standard.json"), fx("modules/z6_regular.json"), "--seed", "1,5"},
      {"tensor", fx("z5_gamma1.json"), fx("modules/z5_regular.json"), fx("modules/z4_zero.json")},
      {"complete", fx("modules/boolean_zero.json")},
      {"sheaf-check", fx("z6_standard.json"), fx("modules/z6_regular.json")},
      {"homology", fx("z5_gamma1.json"), fx("complexes/z4_doubling.json"), "--truncate", "ge0", "--cone",
       fx("maps/doubling_identity.json")},
      {"homology", fx("z5_gamma1.json"), fx("complexes/z5_regular_deg0.json"), "--cone", fx("maps/z5_identity.json"),
       "--tilde"},
      {"shadow-search", fx("sharpness.json"), "--seed", "1,5", "--max-ring", "8"},
      {"generate", "--modulus", "4", "--gammas", "1,3"},
  };
}

}  // namespace

TEST_CASE("exit codes and witnesses") {
  const auto shifted = run({"check-axioms", fx("z6z4_shifted.json")});
  CHECK(shifted.code == cli::kFail);
  const auto rep = shifted.report();
  CHECK(rep["status"] == "fail");
  // Re-evaluate the absorption witness against the fixture tables directly.
  const auto doc = Json::parse(std::ifstream(fx("z6z4_shifted.json")));
  bool absorption_seen = false;
  for (const auto& v : rep["axioms"]) {
    if (v["holds"].get<bool>()) continue;
    const auto& w = v["witness"];
    REQUIRE(w.is_object());
    CHECK(w["lhs"] != w["rhs"]);
    if (v["axiom"] == "absorption") {
      absorption_seen = true;
      const auto e = w["elements"].get<std::vector<std::size_t>>();
      const auto mode = w["modes"][0].get<std::string>();
      REQUIRE(e.size() == 2);
      CHECK(doc["tern"][mode][(e[0] * 6 + 0) * 6 + e[1]] == w["lhs"]);
      CHECK(w["lhs"] != 0);
    }
  }
  CHECK(absorption_seen);

  CHECK(run({"check-axioms", fx("z5_standard.json")}).code == cli::kPass);
  const auto sp = run({"spec", fx("z5_standard.json")});
  CHECK(sp.code == cli::kPass);
  CHECK(sp.report()["primes"].size() == 1);
  CHECK(run({"check-axioms", fx("nat_family.json")}).code == cli::kFail);

  CHECK(run({}).code == cli::kInput);
  CHECK(run({"no-such-command"}).code == cli::kInput);
  CHECK(run({"localize", fx("z5_standard.json")}).code == cli::kInput);  // --seed is required
  CHECK(run({"localize", fx("z5_standard.json"), "--seed", "0"}).code == cli::kInput);
  CHECK(run({"--help"}).code == cli::kPass);
}

TEST_CASE("document validation") {
  auto doc = structure_doc();
  CHECK(run({"check-axioms", scratch("ok.json", doc.dump()).string()}).code == cli::kPass);

  auto ragged = doc;
  ragged["add"][2].erase(0);
  CHECK(run({"check-axioms", scratch("ragged.json", ragged.dump()).string()}).code == cli::kInput);

  auto short_tern = doc;
  short_tern["tern"]["1"].erase(0);
  const auto st = run({"check-axioms", scratch("short.json", short_tern.dump()).string()});
  CHECK(st.code == cli::kInput);
  CHECK(st.err.find("tern") != std::string::npos);

  auto range = doc;
  range["tern"]["1"][7] = 9;
  CHECK(run({"check-axioms", scratch("range.json", range.dump()).string()}).code == cli::kInput);

  auto not_monoid = doc;
  not_monoid["add"][1][1] = 0;
  CHECK(run({"check-axioms", scratch("monoid.json", not_monoid.dump()).string()}).code == cli::kInput);

  CHECK(run({"check-axioms", scratch("broken.json", "{\"carrier\": 2,").string()}).code == cli::kInput);
  CHECK(run({"check-axioms", fx("missing.json")}).code == cli::kInput);

  // A module whose "over" names a different structure than the one given.
  CHECK(run({"tensor", fx("z5_standard.json"), fx("modules/z5_regular.json"), fx("modules/z5_regular.json")}).code ==
        cli::kInput);

  // d∘d ≠ 0 is a mathematical failure, not an input error.
  Json cx = Json::parse(std::ifstream(fx("complexes/z2_exact.json")));
  cx["over"] = fx("z5_gamma1.json");
  for (auto& d : cx["degrees"]) d["module"] = fx("modules/z2_zero.json");
  cx["degrees"].push_back({{"n", 2}, {"module", fx("modules/z2_zero.json")}, {"d", {0, 1}}});
  CHECK(run({"homology", fx("z5_gamma1.json"), scratch("dd.json", cx.dump()).string()}).code == cli::kFail);
}

TEST_CASE("every fixture loads") {
  std::size_t files = 0;
  for (const auto& entry : fs::recursive_directory_iterator(kDir)) {
    if (entry.path().extension() != ".json") continue;
    ++files;
    const auto path = entry.path().string();
    const auto doc = Json::parse(std::ifstream(path));
    const auto dir = entry.path().parent_path();
    std::vector<std::string> args;
    if (doc.contains("family") || doc.contains("tern")) {
      args = {"check-axioms", path};
    } else if (doc.contains("action")) {
      args = {"complete", path};
    } else if (doc.contains("degrees")) {
      args = {"homology", (dir / doc["over"].get<std::string>()).string(), path};
    } else {
      const auto src = (dir / doc["source"].get<std::string>()).string();
      args = {"homology", (dir / doc["over"].get<std::string>()).string(), src, "--cone", path};
    }
    CAPTURE(path);
    CHECK(run(args).code != cli::kInput);
  }
  CHECK(files >= 25);
}

TEST_CASE("reports round-trip and are deterministic") {
  for (const auto& args : corpus_commands()) {
    CAPTURE(args[0]);
    const auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.code != cli::kInput);
    CHECK(without_timing(a.out) == without_timing(b.out));
    CHECK(Json::parse(a.out).dump(2) + "\n" == a.out);
  }
}

TEST_CASE("options") {
  const auto text = run({"spec", fx("z5_standard.json"), "--format", "text"});
  CHECK(text.code == cli::kPass);
  CHECK(text.out.find("status: pass") != std::string::npos);

  const auto gen = run({"generate", "--modulus", "5", "--gammas", "1,2"});
  CHECK(Json::parse(gen.out) == semiring_to_json(instances::z5_standard()));
  CHECK(Json::parse(gen.out) == Json::parse(std::ifstream(fx("z5_standard.json"))));

  const auto capped = run({"shadow-search", fx("z5_standard.json"), "--seed", "2", "--budget", "5"});
  CHECK(capped.code == cli::kBudget);
  CHECK(capped.report()["complete"] == false);
  ::setenv("GAMMA_BUDGET", "5", 1);
  CHECK(run({"shadow-search", fx("z5_standard.json"), "--seed", "2"}).code == cli::kBudget);
  ::unsetenv("GAMMA_BUDGET");

  const auto full = run({"shadow-search", fx("z5_standard.json"), "--seed", "2"});
  CHECK(full.code == cli::kPass);
  CHECK(full.report()["satisfying"].empty());

  const auto sheaf = run({"sheaf-check", fx("z6_standard.json"), fx("modules/z6_regular.json"), "--cover", "2,3"});
  CHECK(sheaf.code == cli::kPass);
  CHECK(sheaf.report()["gluing"]["target"] == "1");
  CHECK(run({"sheaf-check", fx("z6_standard.json"), fx("modules/z6_regular.json"), "--cover", "2"}).code ==
        cli::kInput);

  const auto loc = run({"localize", fx("z5_gamma1.json"), "--seed", "1,2,3,4"});
  CHECK(loc.report()["class_count"] == 5);
  for (const auto& c : loc.report()["classes"])
    if (c["class"] != 0) CHECK(c["inverse"].is_object());
  const auto reps = loc.report()["inputs"];
  REQUIRE(reps.size() == 1);
  CHECK(reps[0]["sha256"].get<std::string>().size() == 64);
}
