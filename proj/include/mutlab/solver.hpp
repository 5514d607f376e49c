#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mutlab/presentation.hpp"
#include "mutlab/representation.hpp"

namespace mutlab {

struct SolveConfig {
  int restarts = 200;
  std::uint64_t seed = 1;
  double accept_tol = 1e-8;
  double dedup_tol = 1e-4;
  int descent_iters = 12;   // projected-gradient warmup steps per restart
  int polish_iters = 120;   // Gauss-Newton cap per restart
  bool saturation_rerun = true;

  void validate() const;  // accept_tol < dedup_tol, positive counts
};

struct RepClass {
  Representation representative;
  Fingerprint fp;
  std::string stabilizer;
  int commutant_dim = 0;
  double residual = 0.0;
  int hits = 0;
};

struct SolveResult {
  std::vector<RepClass> classes;  // sorted by fingerprint
  int restarts_used = 0;
  bool saturation_rerun_triggered = false;
  std::vector<std::string> warnings;

  int irreducible_count() const;
};

// Random-restart minimization of sum_r ||rho(r) - defect_r I||^2 over the
// target family, with retraction to the group and Gauss-Newton polish.
// Central generators (those tied to every other generator by a commutator
// relator) are enumerated over the center before descent, plus one branch
// with the generator left free.  Accepted representations are deduplicated
// by fingerprint clustering; the clustering must be a partition at
// dedup_tol or the solve aborts.
SolveResult find_representations(const Presentation& p, Family family, const SolveConfig& cfg);

// Accepted representations without deduplication (for sampling suites).
std::vector<Representation> sample_representations(const Presentation& p, Family family,
                                                   int count, const SolveConfig& cfg);

struct Conjugator {
  Family family = Family::su2;
  Quat q;       // quaternionic families
  Mat3 m;       // su3
  double residual = 0.0;
};

// Finds c with c rho(g) c^-1 = sigma(g) over the generators.  Tests the
// identity first; throws NotConjugateError (carrying the best residual) when
// fingerprints disagree or optimization cannot reach accept_tol.
Conjugator find_conjugator(const Representation& rho, const Representation& sigma,
                           const SolveConfig& cfg);

double conjugation_residual(const Representation& rho, const Representation& sigma,
                            const Conjugator& c);

// All elements c with c rho(g) c^-1 = sigma(g) reachable from deterministic
// multistarts, distinct within 1e-6.  Empty when the pair is not conjugate.
std::vector<Conjugator> enumerate_conjugators(const Representation& rho,
                                              const Representation& sigma,
                                              const SolveConfig& cfg, int starts = 48);

// Brute-force rotation-number enumeration for 3-fiber Seifert data: counts
// triples (l_1,l_2,l_3), 0 < l_i < a_i, whose angles pi*l_i/a_i satisfy the
// central parity constraints of the fixture presentation and the strict
// spherical-triangle condition.  Exact integer arithmetic throughout;
// independent of the numerical solver.
int rotation_number_count(const SeifertData& data);

// Standard homology-sphere Seifert data for pairwise coprime multiplicities.
SeifertData brieskorn_data(int a1, int a2, int a3);

// Returns rho with its generators (and elements) listed in the given order.
Representation reordered(const Representation& rho, const std::vector<std::string>& generators);

}  // namespace mutlab
