#include "mutlab/mutation.hpp"

#include <algorithm>
#include <cmath>

#include "mutlab/errors.hpp"
#include "mutlab/fixtures.hpp"

namespace mutlab {

namespace {

constexpr double kAxisTol = 1e-11;

// deterministic unit vector orthogonal to u: least-aligned coordinate axis,
// Gram-Schmidt
Vec3 perp_axis(const Vec3& u) {
  const Vec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  int pick = 0;
  double best = 2.0;
  for (int i = 0; i < 3; ++i) {
    double d = std::abs(u.dot(axes[i]));
    if (d < best - 1e-15) {
      best = d;
      pick = i;
    }
  }
  Vec3 v = axes[pick] - u * u.dot(axes[pick]);
  return v.normalized();
}

}  // namespace

Quat f2_conjugator(const Quat& a, const Quat& b) {
  Vec3 ia = a.imag(), ib = b.imag();
  bool has_a = ia.norm() > kAxisTol, has_b = ib.norm() > kAxisTol;
  Vec3 n;
  if (!has_a && !has_b) {
    n = {1, 0, 0};  // identity pair: i by convention
  } else if (has_a && has_b) {
    Vec3 u = ia.normalized(), v = ib.normalized();
    Vec3 c = u.cross(v);
    n = c.norm() > 1e-8 ? c.normalized() : perp_axis(u);
  } else {
    n = perp_axis((has_a ? ia : ib).normalized());
  }
  return Quat::from_vec(0.0, n);
}

double f2_conjugator_residual(const Quat& q, const Quat& a, const Quat& b) {
  double ra = quat_dist(q * a * q.inverse(), a.inverse());
  double rb = quat_dist(q * b * q.inverse(), b.inverse());
  return std::max(ra, rb);
}

namespace {

Quat canonical_lift(const Quat& q) {
  const double c[4] = {q.w, q.x, q.y, q.z};
  for (double v : c) {
    if (std::abs(v) > 1e-9) return v >= 0 ? q : -q;
  }
  return q;
}

Representation compose_with_map(const Representation& rho, const GroupMap& t) {
  Representation out(rho.family(), rho.generators());
  for (int i = 0; i < static_cast<int>(rho.generators().size()); ++i) {
    const Word& im = t.image(rho.generators()[i]);
    if (rho.family() == Family::su3) {
      out.set_mat(i, evaluate_su3(rho, im));
    } else {
      out.set_quat(i, evaluate_quat(rho, im));
    }
  }
  return out;
}

}  // namespace

SurfaceConjugator surface_conjugator(const Representation& rho_sigma, const GroupMap& tau,
                                     const SolveConfig& cfg) {
  if (rho_sigma.family() == Family::su3) {
    throw SolverError("surface conjugators are a quaternionic construction");
  }
  Representation twisted = compose_with_map(rho_sigma, tau);
  Conjugator c = find_conjugator(twisted, rho_sigma, cfg);  // c twisted c^-1 = rho
  SurfaceConjugator out;
  out.plus = canonical_lift(c.q);
  out.residual = c.residual;
  return out;
}

Representation heegaard_mutate(const Representation& rho, const GroupMap& t) {
  return compose_with_map(rho, t);
}

ZOrderReport check_z_order(const Quat& z_image, double tol) {
  ZOrderReport rep;
  rep.abs_real = std::abs(z_image.w);
  rep.so3_trace = trace_so3(z_image);
  rep.order_two = rep.abs_real <= tol;
  return rep;
}

void require_z_order(const MutationResult& res, double tol) {
  if (!check_z_order(res.conj.plus, tol).order_two) {
    throw OrderCheckFailedError("z-image is not an order-two rotation (|Re| = " +
                                std::to_string(std::abs(res.conj.plus.w)) + ")");
  }
}

MutationResult mutate_rep(const SplittingData& s, const Representation& rho,
                          const SolveConfig& cfg) {
  s.validate();
  if (rho.family() == Family::su3) throw SolverError("mutation acts on quaternionic families");

  Presentation untwisted = build_amalgam(s, GroupMap::identity(s.surface.generators));
  Representation input = reordered(rho, untwisted.generators);
  double input_res = presentation_residual(input, untwisted);
  if (input_res > 100 * cfg.accept_tol) {
    throw SolverError("representation does not satisfy the untwisted amalgam (residual " +
                      std::to_string(input_res) + ")");
  }

  GroupMap tau = hyperelliptic_action(s.surface);

  // restriction to the surface through the A side
  Representation sigma(rho.family(), s.surface.generators);
  for (const auto& g : s.surface.generators) {
    sigma.set_quat(g, evaluate_quat(input, s.i_a.apply(Word::generator(g))));
  }

  MutationResult result;
  result.input = input;
  result.input_residual = input_res;
  result.sigma_commutant_dim = commutant_dimension(sigma);
  result.reducible_on_sigma = result.sigma_commutant_dim > 0;
  result.conj = surface_conjugator(sigma, tau, cfg);
  const Quat g = result.conj.plus;

  // mutant: A side kept, B side conjugated
  Presentation twisted = build_amalgam(s, tau);
  result.mutated = Representation(rho.family(), twisted.generators);
  for (const auto& gen : s.side_a.generators) result.mutated.set_quat(gen, input.quat(gen));
  for (const auto& gen : s.side_b.generators) {
    result.mutated.set_quat(gen, g * input.quat(gen) * g.inverse());
  }
  result.amalgam_residual = presentation_residual(result.mutated, twisted);

  // extension over the cobordism: both sides verbatim, z -> g
  Presentation wtau = build_wtau(s);
  result.wtau_extension = Representation(rho.family(), wtau.generators);
  for (const auto& gen : s.side_a.generators) result.wtau_extension.set_quat(gen, input.quat(gen));
  for (const auto& gen : s.side_b.generators) result.wtau_extension.set_quat(gen, input.quat(gen));
  result.wtau_extension.set_quat("z", g);
  result.wtau_residual = presentation_residual(result.wtau_extension, wtau);

  result.mutated.set_residual(result.amalgam_residual);
  result.wtau_extension.set_residual(result.wtau_residual);
  result.z_order = check_z_order(g);
  return result;
}

std::vector<Quat> enumerate_z_images(const SplittingData& s, const Representation& rho,
                                     const SolveConfig& cfg, int starts) {
  // z satisfies z^-1 rho(i_a(g)) z = rho(i_b(tau(g))), so the z-images are
  // exactly the elements conjugating the i_b-twisted tuple to the i_a tuple
  GroupMap tau = hyperelliptic_action(s.surface);
  Representation side_a_tuple(rho.family(), s.surface.generators);
  Representation side_b_tuple(rho.family(), s.surface.generators);
  for (const auto& g : s.surface.generators) {
    side_a_tuple.set_quat(g, evaluate_quat(rho, s.i_a.apply(Word::generator(g))));
    side_b_tuple.set_quat(g, evaluate_quat(rho, s.i_b.apply(tau.image(g))));
  }
  std::vector<Quat> found;
  for (const auto& c : enumerate_conjugators(side_b_tuple, side_a_tuple, cfg, starts)) {
    found.push_back(c.q);
  }
  return found;
}

DualityOrbits su3_duality_orbits(const std::vector<RepClass>& classes, double tol) {
  DualityOrbits orbits;
  const int n = static_cast<int>(classes.size());
  std::vector<int> partner(n, -1);
  std::vector<bool> ambiguous(n, false);
  for (int i = 0; i < n; ++i) {
    Fingerprint conj_fp = conjugate(classes[i].fp);
    int hits = 0;
    for (int j = 0; j < n; ++j) {
      if (fingerprint_distance(conj_fp, classes[j].fp) <= tol) {
        partner[i] = j;
        ++hits;
      }
    }
    if (hits == 0) {
      throw UnmatchedClassError("class " + std::to_string(i) +
                                " has no conjugate partner; the solve looks incomplete");
    }
    if (hits > 1) ambiguous[i] = true;
  }
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    if (ambiguous[i] || (partner[i] >= 0 && ambiguous[partner[i]])) {
      orbits.unresolved.push_back(i);
      used[i] = true;
      continue;
    }
    if (partner[i] == i) {
      orbits.fixed.push_back(i);
      used[i] = true;
    } else {
      int j = partner[i];
      if (partner[j] != i) {
        orbits.unresolved.push_back(i);
        used[i] = true;
        continue;
      }
      orbits.swapped.emplace_back(i, j);
      used[i] = used[j] = true;
    }
  }
  return orbits;
}

Representation maptorus_path(double r) {
  Presentation mt = maptorus_presentation();
  Representation rho(Family::su2, mt.generators);
  Quat a = exp_su2({-M_PI * r / 2.0, 0, 0});
  rho.set_quat("a1", a);
  rho.set_quat("a2", a);
  rho.set_quat("b1", quat_j());
  rho.set_quat("b2", quat_j());
  rho.set_quat("z", exp_su2({0, M_PI * (1.0 - r) / 2.0, 0}));
  return rho;
}

Representation maptorus_bridge(double s) {
  Representation rho = maptorus_path(0.0);
  Quat circle{std::sin(M_PI * s), 0, std::cos(M_PI * s), 0};
  rho.set_quat("z", quat_i() * circle);
  return rho;
}

Quat maptorus_conjugator(double r) {
  double t = M_PI * r / 2.0;
  return Quat{0, 0, std::sin(t), std::cos(t)};
}

namespace {

// HNN relator residual for the four surface generators with a given z-image
double hnn_residual(const Representation& surface_part, const GroupMap& tau, const Quat& z) {
  double worst = 0.0;
  for (const auto& g : surface_part.generators()) {
    Quat lhs = z.inverse() * surface_part.quat(g) * z;
    Quat rhs = evaluate_quat(surface_part, tau.image(g));
    worst = std::max(worst, quat_dist(lhs, rhs));
  }
  return worst;
}

Representation surface_restriction(const Representation& mt_rep) {
  Representation out(Family::su2, surface_presentation().generators);
  for (const auto& g : out.generators()) out.set_quat(g, mt_rep.quat(g));
  return out;
}

}  // namespace

PathReport verify_path(int grid_points, const SolveConfig& cfg) {
  PathReport report;
  if (grid_points < 2) {
    report.failure = "grid needs at least 2 points";
    return report;
  }
  const Presentation surf = surface_presentation();
  const GroupMap tau = hyperelliptic_action(surf);
  const Word relator = surf.relators.at(0).word;

  Quat prev_opt = Quat::identity();
  bool have_prev = false;
  bool ok = true;
  std::string why;

  for (int i = 0; i < grid_points; ++i) {
    double r = static_cast<double>(i) / (grid_points - 1);
    Representation alpha = surface_restriction(maptorus_path(r));
    PathPoint pt;
    pt.r = r;
    pt.relator_residual = quat_dist(evaluate_quat(alpha, relator), Quat::identity());

    SurfaceConjugator sc = surface_conjugator(alpha, tau, cfg);
    pt.conj_residual = sc.residual;

    Quat closed = maptorus_conjugator(r);
    pt.closed_form_residual = hnn_residual(alpha, tau, closed);

    // sign-aligned optimizer chain; r = 0 sits on a circle of conjugators
    // and is excluded from the continuity bound
    if (r > 1e-9) {
      Quat opt = sc.plus;
      if (have_prev && quat_dist(opt, prev_opt) > quat_dist(-opt, prev_opt)) opt = -opt;
      if (have_prev) {
        report.continuity_max_step =
            std::max(report.continuity_max_step, quat_dist(opt, prev_opt));
      }
      prev_opt = opt;
      have_prev = true;
      pt.optimizer_match = std::min(quat_dist(opt, closed), quat_dist(-opt, closed));
    }

    Quat printed = exp_su2({0, M_PI * (1.0 - r) / 2.0, 0});
    pt.printed_formula_residual = hnn_residual(alpha, tau, printed);
    report.printed_max_residual = std::max(report.printed_max_residual, pt.printed_formula_residual);

    if (pt.relator_residual > 1e-12) {
      ok = false;
      why = "surface relator fails at r = " + std::to_string(r);
    }
    if (pt.conj_residual > 1e-8) {
      ok = false;
      why = "conjugator missing at r = " + std::to_string(r);
    }
    if (pt.closed_form_residual > 1e-10) {
      ok = false;
      why = "piece conjugator fails the twist relators at r = " + std::to_string(r);
    }
    if (r > 1e-9 && pt.optimizer_match > 1e-6) {
      ok = false;
      why = "optimizer disagrees with the path conjugator at r = " + std::to_string(r);
    }
    report.points.push_back(pt);
  }
  if (report.continuity_max_step > 8.0 / grid_points) {
    ok = false;
    why = "conjugator chain is not continuous after sign alignment";
  }

  // bridge through the reducible stratum, z rotating k -> -k
  Representation alpha0 = surface_restriction(maptorus_path(0.0));
  for (int i = 0; i < grid_points; ++i) {
    double s = static_cast<double>(i) / (grid_points - 1);
    Quat z = maptorus_bridge(s).quat("z");
    report.bridge_max_residual =
        std::max(report.bridge_max_residual, hnn_residual(alpha0, tau, z));
  }
  if (report.bridge_max_residual > 1e-10) {
    ok = false;
    why = "bridge piece fails the twist relators";
  }

  report.junction_gap_start = quat_dist(maptorus_conjugator(0.0), maptorus_bridge(0.0).quat("z"));
  report.junction_gap_end = quat_dist(maptorus_bridge(1.0).quat("z"), -maptorus_conjugator(0.0));
  report.endpoint_sign_gap = quat_dist(-maptorus_conjugator(1.0), -quat_j());
  if (report.junction_gap_start > 1e-10 || report.junction_gap_end > 1e-10 ||
      report.endpoint_sign_gap > 1e-10) {
    ok = false;
    why = "path pieces do not meet at the junctions";
  }

  report.printed_formula_flag = report.printed_max_residual > 1e-8;
  report.pass = ok;
  report.failure = ok ? "" : why;
  return report;
}

}  // namespace mutlab
