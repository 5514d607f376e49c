#include <doctest.h>

#include <nlohmann/json.hpp>

#include "mutlab/fixtures.hpp"
#include "mutlab/report.hpp"
#include "mutlab/serialize.hpp"
#include "mutlab/solver.hpp"

using namespace mutlab;

TEST_CASE("presentation json round trip") {
  Presentation p = build_seifert(brieskorn_data(2, 3, 7));
  Presentation back = presentation_from_json(presentation_to_json(p));
  CHECK(back.generators == p.generators);
  REQUIRE(back.relators.size() == p.relators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    CHECK(back.relators[i].word == p.relators[i].word);
    CHECK(back.relators[i].defect == p.relators[i].defect);
  }
}

TEST_CASE("group map and splitting json round trips") {
  GroupMap tau = tau_star();
  GroupMap back = group_map_from_json(group_map_to_json(tau));
  for (const auto& [g, w] : tau.images()) CHECK(back.image(g) == w);

  SplittingData s = twisted_splitting(7, 4);
  SplittingData s2 = splitting_from_json(splitting_to_json(s));
  CHECK(s2.name == s.name);
  for (const auto& g : s.surface.generators) {
    CHECK(s2.i_b.image(g) == s.i_b.image(g));
  }
}

TEST_CASE("representation json round trips in both families") {
  Rng rng(5);
  Representation q = haar_representation(Family::su2, {"x", "y"}, rng);
  Representation q2 = representation_from_json(representation_to_json(q));
  for (const auto& g : q.generators()) CHECK(quat_dist(q.quat(g), q2.quat(g)) <= 1e-15);

  Representation u = haar_representation(Family::su3, {"x", "y"}, rng);
  Representation u2 = representation_from_json(representation_to_json(u));
  for (const auto& g : u.generators()) CHECK((u.mat(g) - u2.mat(g)).norm() <= 1e-12);
}

TEST_CASE("rep class serialization preserves the fingerprint") {
  SolveConfig cfg;
  cfg.restarts = 30;
  cfg.seed = 3;
  SolveResult r = find_representations(build_seifert(brieskorn_data(2, 3, 5)), Family::su2, cfg);
  REQUIRE(!r.classes.empty());
  for (const auto& c : r.classes) {
    RepClass back = rep_class_from_json(nlohmann::json::parse(rep_class_to_json(c).dump()));
    CHECK(fingerprint_distance(back.fp, c.fp) == 0.0);
    CHECK(back.stabilizer == c.stabilizer);
    CHECK(back.hits == c.hits);
  }
  auto classes = classes_from_json(nlohmann::json::parse(solve_result_to_json(r).dump()));
  CHECK(classes.size() == r.classes.size());
}

TEST_CASE("equal configs reproduce byte-identical reports") {
  auto run_once = [] {
    RunConfig rc;
    rc.seed = 12;
    rc.restarts = 25;
    SolveConfig cfg;
    cfg.restarts = rc.restarts;
    cfg.seed = rc.seed;
    SolveResult r = find_representations(build_seifert(brieskorn_data(2, 3, 5)), Family::su2, cfg);
    Report report;
    report.command = "solve";
    report.config = rc;
    report.payload = solve_result_to_json(r);
    CheckRecord rec = CheckRecord::make("SOLVE-RESIDUAL", true);
    rec.residuals["max_residual"] = r.classes.empty() ? 0.0 : r.classes.back().residual;
    report.add(rec);
    return report.to_json().dump(2);
  };
  CHECK(run_once() == run_once());
}

TEST_CASE("claim registry backs every check record") {
  CHECK(claim_registry().size() >= 11);
  CHECK_THROWS(CheckRecord::make("NO-SUCH-CLAIM", true));
  CHECK(!claim_statement("BODEN-SU3").empty());
}
