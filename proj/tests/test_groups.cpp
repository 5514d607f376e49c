#include <doctest.h>

#include <cmath>
#include <complex>

#include "mutlab/errors.hpp"
#include "mutlab/fixtures.hpp"
#include "mutlab/mutation.hpp"
#include "mutlab/representation.hpp"
#include "mutlab/rng.hpp"

using namespace mutlab;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("quaternion product is associative to 1e-12") {
  Rng rng(1);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    Quat a = haar_su2(rng), b = haar_su2(rng), c = haar_su2(rng);
    worst = std::max(worst, quat_dist((a * b) * c, a * (b * c)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("projective equality is sign-blind") {
  Rng rng(2);
  Quat q = haar_su2(rng);
  CHECK(projective_dist(q, -q) == 0.0);
  CHECK(quat_dist(q, -q) > 1.0);
}

TEST_CASE("traces are conjugation invariant") {
  Rng rng(3);
  double worst2 = 0.0, worst3 = 0.0;
  for (int i = 0; i < 2000; ++i) {
    Quat g = haar_su2(rng), a = haar_su2(rng);
    worst2 = std::max(worst2, std::abs(trace_su2(g * a * g.inverse()) - trace_su2(a)));
    Mat3 u = haar_su3(rng), v = haar_su3(rng);
    worst3 = std::max(worst3,
                      std::abs((u * v * u.adjoint()).trace() - v.trace()));
  }
  CHECK(worst2 <= 1e-10);
  CHECK(worst3 <= 1e-10);
}

TEST_CASE("exponential map hits the textbook values") {
  CHECK(quat_dist(exp_su2({0, 0, 0}), Quat::identity()) == 0.0);

  Quat q = exp_su2({-kPi / 4, 0, 0});
  CHECK(q.w == doctest::Approx(std::cos(kPi / 4)).epsilon(1e-14));
  CHECK(q.x == doctest::Approx(-std::sin(kPi / 4)).epsilon(1e-14));

  // exp((pi/2) j) i exp(-(pi/2) j) = -i
  Quat c = exp_su2({0, kPi / 2, 0});
  Quat moved = c * quat_i() * c.inverse();
  CHECK(quat_dist(moved, -quat_i()) <= 1e-14);
}

TEST_CASE("log inverts exp away from the antipode") {
  Rng rng(4);
  for (int i = 0; i < 2000; ++i) {
    Vec3 v{rng.gaussian(), rng.gaussian(), rng.gaussian()};
    double n = v.norm();
    if (n >= kPi - 1e-3 || n < 1e-8) continue;
    Vec3 back = log_su2(exp_su2(v));
    CHECK((back - v).norm() <= 1e-10);
  }
  CHECK_THROWS_AS(log_su2(-Quat::identity()), LogAtAntipodeError);
}

TEST_CASE("evaluation is a homomorphism") {
  Rng rng(5);
  Representation rho = haar_representation(Family::su2, {"a", "b", "c"}, rng);
  const std::string gens[3] = {"a", "b", "c"};
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Letter> lu, lv;
    for (int i = 0; i < 6; ++i) {
      lu.push_back(Letter{gens[rng.uniform_int(3)], rng.uniform_int(2) ? 1 : -1});
      lv.push_back(Letter{gens[rng.uniform_int(3)], rng.uniform_int(2) ? 1 : -1});
    }
    Word u(lu), v(lv);
    worst = std::max(worst, quat_dist(evaluate_quat(rho, u * v),
                                      evaluate_quat(rho, u) * evaluate_quat(rho, v)));
  }
  CHECK(worst <= 1e-10);
  CHECK(quat_dist(evaluate_quat(rho, Word()), Quat::identity()) == 0.0);
  CHECK_THROWS_AS(evaluate_quat(rho, Word::parse("zz")), UnknownGeneratorError);
}

TEST_CASE("path representation satisfies the surface relator at r = 1") {
  Representation alpha1 = maptorus_path(1.0);
  CHECK(quat_dist(evaluate_quat(alpha1, surface_relator()), Quat::identity()) <= 1e-13);
  // 2 cos(pi/2) = 0
  CHECK(std::abs(trace_of(alpha1, Word::parse("a1"))) <= 1e-13);
}

TEST_CASE("bridge piece starts at k and ends at -k") {
  CHECK(quat_dist(maptorus_bridge(0.0).quat("z"), quat_k()) <= 1e-13);
  CHECK(quat_dist(maptorus_bridge(1.0).quat("z"), -quat_k()) <= 1e-13);
}

TEST_CASE("fingerprint of the trivial representation is all twos") {
  Representation triv(Family::su2, {"x", "y", "z_"});
  for (const auto& t : fingerprint(triv).traces) {
    CHECK(t.real() == doctest::Approx(2.0));
    CHECK(t.imag() == 0.0);
  }
}

TEST_CASE("SU(3) conjugate representation has the conjugate fingerprint") {
  Rng rng(6);
  Representation rho = haar_representation(Family::su3, {"x", "y"}, rng);
  Representation bar(Family::su3, {"x", "y"});
  for (int i = 0; i < 2; ++i) bar.set_mat(i, rho.mat(i).conjugate());
  Fingerprint a = fingerprint(rho), b = fingerprint(bar);
  for (std::size_t i = 0; i < a.traces.size(); ++i) {
    CHECK(std::abs(std::conj(a.traces[i]) - b.traces[i]) <= 1e-12);
  }
}

TEST_CASE("commutant dimensions separate the stabilizer types") {
  Representation triv(Family::su2, {"x", "y"});
  CHECK(commutant_dimension(triv) == 3);
  CHECK(stabilizer_label(Family::su2, 3) == "central");

  Representation circle(Family::su2, {"x", "y"});
  circle.set_quat(0, exp_su2({0.3, 0, 0}));
  circle.set_quat(1, exp_su2({1.1, 0, 0}));
  CHECK(commutant_dimension(circle) == 1);
  CHECK(stabilizer_label(Family::su2, 1) == "U(1)");

  Representation alpha1(Family::su2, surface_presentation().generators);
  Representation path = maptorus_path(1.0);
  for (const auto& g : alpha1.generators()) alpha1.set_quat(g, path.quat(g));
  CHECK(commutant_dimension(alpha1) == 0);
  CHECK(stabilizer_label(Family::su2, 0) == "irreducible");

  // reducible stratum of the path
  Representation alpha0(Family::su2, surface_presentation().generators);
  Representation path0 = maptorus_path(0.0);
  for (const auto& g : alpha0.generators()) alpha0.set_quat(g, path0.quat(g));
  CHECK(commutant_dimension(alpha0) == 1);
}

TEST_CASE("haar sampling is deterministic per seed and statistically centered") {
  Rng a(77), b(77);
  CHECK(quat_dist(haar_su2(a), haar_su2(b)) == 0.0);

  Rng rng(8);
  double mean = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) mean += trace_su2(haar_su2(rng));
  mean /= n;
  CHECK(std::abs(mean) <= 0.01);  // 3 sigma for tr with unit variance

  Rng rng3(9);
  std::complex<double> mean3 = 0.0;
  const int n3 = 20000;
  double worst_unitary = 0.0;
  for (int i = 0; i < n3; ++i) {
    Mat3 u = haar_su3(rng3);
    worst_unitary = std::max({worst_unitary, unitary_residual(u), special_residual(u)});
    mean3 += u.trace();
  }
  mean3 /= n3;
  CHECK(std::abs(mean3) <= 0.03);
  CHECK(worst_unitary <= 1e-10);
}

TEST_CASE("so3 traces come from the double cover") {
  Quat q = exp_su2({0.4, 0.2, -0.1});
  double theta = 2.0 * std::acos(q.w);
  CHECK(trace_so3(q) == doctest::Approx(1.0 + 2.0 * std::cos(theta)).epsilon(1e-12));
}
