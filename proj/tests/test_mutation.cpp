#include <doctest.h>

#include <cmath>

#include "mutlab/errors.hpp"
#include "mutlab/fixtures.hpp"
#include "mutlab/mutation.hpp"
#include "mutlab/solver.hpp"

using namespace mutlab;

namespace {

constexpr double kPi = 3.14159265358979323846;

SolveConfig cfg_with(int restarts, std::uint64_t seed) {
  SolveConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("f2 conjugator inverts both generators") {
  Quat a = exp_su2({kPi / 3, 0, 0});
  Quat b = exp_su2({0, kPi / 4, 0});
  Quat q = f2_conjugator(a, b);
  CHECK(projective_dist(q, quat_k()) <= 1e-14);
  CHECK(f2_conjugator_residual(q, a, b) <= 1e-14);

  // conventions at the degenerate inputs
  CHECK(quat_dist(f2_conjugator(Quat::identity(), Quat::identity()), quat_i()) == 0.0);
  Quat same = exp_su2({0.9, 0, 0});
  CHECK(quat_dist(f2_conjugator(same, same), quat_j()) == 0.0);

  Rng rng(51);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    Quat x = haar_su2(rng), y = haar_su2(rng);
    worst = std::max(worst, f2_conjugator_residual(f2_conjugator(x, y), x, y));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("surface conjugator exists on solved surface representations") {
  SolveConfig cfg = cfg_with(10, 61);
  cfg.accept_tol = 1e-10;
  auto reps = sample_representations(surface_presentation(), Family::su2, 25, cfg);
  for (const auto& rho : reps) {
    SurfaceConjugator sc = surface_conjugator(rho, tau_star(), cfg);
    CHECK(sc.residual <= 1e-8);
    CHECK(quat_dist(sc.minus(), -sc.plus) == 0.0);

    // the square of the action is inner: the character does not move
    Representation twice(Family::su2, rho.generators());
    for (const auto& g : rho.generators()) {
      twice.set_quat(g, evaluate_quat(rho, tau_star().apply(tau_star().image(g))));
    }
    CHECK(fingerprint_distance(fingerprint(twice), fingerprint(rho)) <= 1e-6);
  }
}

TEST_CASE("heegaard involution fixes free-group characters") {
  Rng rng(71);
  double worst = 0.0;
  for (int i = 0; i < 300; ++i) {
    Family fam = i % 2 ? Family::so3 : Family::su2;
    Representation rho = haar_representation(fam, f2_presentation().generators, rng);
    Representation moved = heegaard_mutate(rho, heegaard_involution());
    worst = std::max(worst, fingerprint_distance(fingerprint(rho), fingerprint(moved)));
  }
  CHECK(worst <= 1e-10);

  Representation triv(Family::su2, f2_presentation().generators);
  Representation moved = heegaard_mutate(triv, heegaard_involution());
  CHECK(fingerprint_distance(fingerprint(triv), fingerprint(moved)) == 0.0);
}

TEST_CASE("z-order report separates the identity from order-two images") {
  CHECK_FALSE(check_z_order(Quat::identity()).order_two);
  ZOrderReport good = check_z_order(quat_k());
  CHECK(good.order_two);
  CHECK(good.so3_trace == doctest::Approx(-1.0));
}

TEST_CASE("printed path assignments match the quoted endpoints") {
  CHECK(quat_dist(maptorus_path(0.0).quat("z"), quat_j()) <= 1e-15);
  CHECK(quat_dist(maptorus_bridge(0.0).quat("z"), quat_k()) <= 1e-15);
  CHECK(quat_dist(maptorus_bridge(1.0).quat("z"), -quat_k()) <= 1e-15);
  CHECK(quat_dist(evaluate_quat(maptorus_path(1.0), surface_relator()), Quat::identity()) <=
        1e-13);
}

TEST_CASE("path verification passes and flags the printed formula") {
  PathReport pr = verify_path(21, cfg_with(10, 81));
  CHECK(pr.pass);
  CHECK(pr.printed_formula_flag);       // the printed z-image fails the twist relators
  CHECK(pr.printed_max_residual > 0.1);  // grossly, not marginally
  CHECK(pr.junction_gap_start <= 1e-10);
  CHECK(pr.junction_gap_end <= 1e-10);
  CHECK(pr.bridge_max_residual <= 1e-10);
}

TEST_CASE("duality orbits on synthetic fingerprints") {
  auto mk = [](std::vector<std::complex<double>> traces, int dim) {
    RepClass c;
    c.fp.traces = std::move(traces);
    c.commutant_dim = dim;
    return c;
  };
  // all real: every class fixed
  std::vector<RepClass> real_classes = {mk({2.0, 1.0}, 0), mk({-1.0, 0.5}, 0)};
  DualityOrbits o1 = su3_duality_orbits(real_classes, 1e-6);
  CHECK(o1.fixed.size() == 2);
  CHECK(o1.swapped.empty());
  CHECK(o1.unresolved.empty());

  using namespace std::complex_literals;
  std::vector<RepClass> pair_classes = {mk({2.0 + 1.0i}, 0), mk({2.0 - 1.0i}, 0)};
  DualityOrbits o2 = su3_duality_orbits(pair_classes, 1e-6);
  CHECK(o2.fixed.empty());
  CHECK(o2.swapped.size() == 1);

  std::vector<RepClass> unmatched = {mk({2.0 + 1.0i}, 0)};
  CHECK_THROWS_AS(su3_duality_orbits(unmatched, 1e-6), UnmatchedClassError);
}

TEST_CASE("mutation of the trivial representation is trivial") {
  SplittingData s = standard_splitting();
  Presentation amalgam = build_amalgam(s, GroupMap::identity(s.surface.generators));
  Representation triv(Family::su2, amalgam.generators);
  MutationResult res = mutate_rep(s, triv, cfg_with(10, 91));
  CHECK(quat_dist(res.conj.plus, Quat::identity()) == 0.0);
  CHECK(res.amalgam_residual <= 1e-12);
  CHECK(res.wtau_residual <= 1e-12);
  CHECK(res.reducible_on_sigma);
}

TEST_CASE("mutation of an irreducible fixture representation") {
  // deterministic fixture: a homology-sphere splitting with irreducible classes
  auto splittings = homology_sphere_splittings(2026, 12);
  SolveConfig cfg = cfg_with(160, 7);
  bool exercised = false;
  for (const auto& s : splittings) {
    Presentation amalgam = build_amalgam(s, GroupMap::identity(s.surface.generators));
    SolveResult sr = find_representations(amalgam, Family::su2, cfg);
    for (const auto& c : sr.classes) {
      MutationResult res = mutate_rep(s, c.representative, cfg);
      if (res.reducible_on_sigma) continue;
      exercised = true;

      CHECK(res.conj.residual <= 1e-8);
      CHECK(res.amalgam_residual <= 1e-8);
      CHECK(res.wtau_residual <= 1e-8);
      CHECK(res.z_order.order_two);
      CHECK(std::abs(res.z_order.so3_trace + 1.0) <= 1e-6);

      // exactly the two lifts of the conjugator complete the extension
      auto zs = enumerate_z_images(s, res.input, cfg);
      REQUIRE(zs.size() == 2);
      for (const auto& z : zs) {
        double match = std::min(quat_dist(z, res.conj.plus), quat_dist(z, res.conj.minus()));
        CHECK(match <= 1e-6);
      }
      CHECK(projective_dist(res.conj.plus, res.conj.minus()) == 0.0);

      // involution at the character level
      SplittingData twisted = s;
      twisted.name = s.name + "_tau";
      twisted.i_b = compose(s.i_b, hyperelliptic_action(s.surface));
      MutationResult back = mutate_rep(twisted, res.mutated, cfg);
      CHECK(fingerprint_distance(fingerprint(back.mutated), fingerprint(res.input)) <= 1e-6);
    }
    if (exercised) break;
  }
  CHECK_MESSAGE(exercised, "no splitting fixture produced an irreducible class");
}
