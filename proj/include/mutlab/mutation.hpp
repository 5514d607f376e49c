#pragma once

#include <utility>
#include <vector>

#include "mutlab/presentation.hpp"
#include "mutlab/representation.hpp"
#include "mutlab/solver.hpp"

namespace mutlab {

// Pure unit quaternion q with q A q^-1 = A^-1 and q B q^-1 = B^-1: any
// order-four element orthogonal to both rotation axes.  Degenerate inputs
// resolve by convention (identity pair -> i, shared axis -> a fixed
// perpendicular).
Quat f2_conjugator(const Quat& a, const Quat& b);
double f2_conjugator_residual(const Quat& q, const Quat& a, const Quat& b);

// Conjugator realizing the hyperelliptic action on a surface-group
// representation: g with rho(tau(w)) = g^-1 rho(w) g.  For irreducible rho
// the two lifts are +-g; `plus` carries the lift whose first nonzero
// coordinate is positive.
struct SurfaceConjugator {
  Quat plus;
  double residual = 0.0;
  Quat minus() const { return -plus; }
};

SurfaceConjugator surface_conjugator(const Representation& rho_sigma, const GroupMap& tau,
                                     const SolveConfig& cfg);

struct ZOrderReport {
  double abs_real = 0.0;   // |Re z| as a quaternion; 0 iff order two in SO(3)
  double so3_trace = 0.0;  // 4w^2 - 1; -1 iff order two
  bool order_two = false;
};

struct MutationResult {
  Representation input;
  SurfaceConjugator conj;
  Representation mutated;         // on build_amalgam(s, tau) generators
  Representation wtau_extension;  // sides plus z -> g on build_wtau(s)
  double input_residual = 0.0;
  double amalgam_residual = 0.0;  // mutated against the twisted amalgam
  double wtau_residual = 0.0;     // extension against the cobordism relators
  ZOrderReport z_order;
  bool reducible_on_sigma = false;
  int sigma_commutant_dim = 0;
};

// The mutation correspondence: restrict to the surface, conjugate the B side
// by the surface conjugator, extend over the cobordism with z -> g.
// Reducibility of the surface restriction flags the result (uniqueness is
// lost, the construction still goes through).
MutationResult mutate_rep(const SplittingData& s, const Representation& rho,
                          const SolveConfig& cfg);

ZOrderReport check_z_order(const Quat& z_image, double tol = 1e-8);
void require_z_order(const MutationResult& res, double tol = 1e-8);  // throws OrderCheckFailedError

// rho compose T: evaluates generator images under the endomorphism.
Representation heegaard_mutate(const Representation& rho, const GroupMap& t);

// All z-images completing the side assignments to a representation of
// build_wtau(s), from deterministic multistarts; clustered within 1e-6.
std::vector<Quat> enumerate_z_images(const SplittingData& s, const Representation& rho,
                                     const SolveConfig& cfg, int starts = 48);

struct DualityOrbits {
  std::vector<int> fixed;
  std::vector<std::pair<int, int>> swapped;
  std::vector<int> unresolved;  // ambiguous matches within tolerance
};

// Pairs each SU(3) class with the class carrying the entrywise-conjugate
// fingerprint (the dual representation).  A class with no partner aborts:
// the solve was incomplete.
DualityOrbits su3_duality_orbits(const std::vector<RepClass>& classes, double tol);

// Explicit twisted mapping-torus representations: the printed path formula
// on the surface generators with z from the same formula, and the bridge
// through the reducible stratum.
Representation maptorus_path(double r);
Representation maptorus_bridge(double s);

// z-image that actually intertwines the surface representation at parameter
// r (the printed formula does not; see PathReport.printed_max_residual).
Quat maptorus_conjugator(double r);

struct PathPoint {
  double r = 0.0;
  double relator_residual = 0.0;       // surface relator at alpha_r
  double conj_residual = 0.0;          // optimizer conjugator
  double closed_form_residual = 0.0;   // hand conjugator against the HNN relators
  double optimizer_match = 0.0;        // optimizer vs closed form, up to sign
  double printed_formula_residual = 0.0;
};

struct PathReport {
  bool pass = false;
  std::string failure;
  std::vector<PathPoint> points;
  double junction_gap_start = 0.0;  // piece 1 end vs bridge start
  double junction_gap_end = 0.0;    // bridge end vs piece 3 start
  double endpoint_sign_gap = 0.0;   // alpha_1' z-image vs -alpha_1 z-image
  double bridge_max_residual = 0.0;
  double continuity_max_step = 0.0;
  double printed_max_residual = 0.0;  // flagged, not failed
  bool printed_formula_flag = false;
};

// Walks the three path pieces on a grid: relator residuals, conjugator
// existence by optimization, junction agreement, and the printed-z-formula
// discrepancy as a flag.
PathReport verify_path(int grid_points, const SolveConfig& cfg);

}  // namespace mutlab
