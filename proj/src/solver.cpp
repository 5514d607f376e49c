#include "mutlab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <Eigen/Dense>

#include "mutlab/errors.hpp"

namespace mutlab {

void SolveConfig::validate() const {
  if (!(accept_tol > 0) || !(dedup_tol > 0)) throw SolverError("tolerances must be positive");
  if (!(accept_tol < dedup_tol)) throw SolverError("accept_tol must be < dedup_tol");
  if (restarts < 1) throw SolverError("restarts must be >= 1");
}

int SolveResult::irreducible_count() const {
  int n = 0;
  for (const auto& c : classes) {
    if (c.commutant_dim == 0) ++n;
  }
  return n;
}

namespace {

constexpr double kPolishTarget = 5e-14;

using CWord = std::vector<std::pair<int, int>>;  // (generator index, +-1)

CWord compile_word(const Word& w, const Presentation& p) {
  CWord out;
  for (const Letter& l : w.letters()) {
    int idx = p.generator_index(l.gen);
    if (idx < 0) throw UnknownGeneratorError("word uses unknown generator: " + l.gen);
    out.emplace_back(idx, l.exp);
  }
  return out;
}

// ---- family adapters ------------------------------------------------------

struct QuatOps {
  using El = Quat;
  static constexpr int kFlat = 4;
  static constexpr int kDim = 3;

  static El id() { return Quat::identity(); }
  static El mul(const El& a, const El& b) { return a * b; }
  static El inv(const El& a) { return a.inverse(); }
  static El basis_left(int a, const El& m) {
    static const Quat e[3] = {quat_i(), quat_j(), quat_k()};
    return e[a] * m;
  }
  static El basis_right(const El& m, int a) {
    static const Quat e[3] = {quat_i(), quat_j(), quat_k()};
    return m * e[a];
  }
  static void flatten(const El& p, double* out) {
    out[0] = p.w;
    out[1] = p.x;
    out[2] = p.y;
    out[3] = p.z;
  }
  static void flatten_target(double defect, double* out) {
    out[0] = defect;
    out[1] = out[2] = out[3] = 0.0;
  }
  static El step(const El& xcur, const double* d) {
    return (exp_su2({d[0], d[1], d[2]}) * xcur).normalized();
  }
  static El haar(Rng& rng) { return haar_su2(rng); }
  static El clean(const El& x) { return x.normalized(); }
};

struct Su3Ops {
  using El = Mat3;
  static constexpr int kFlat = 18;
  static constexpr int kDim = 8;

  static El id() { return Mat3::Identity(); }
  static El mul(const El& a, const El& b) { return a * b; }
  static El inv(const El& a) { return a.adjoint(); }
  static El basis_left(int a, const El& m) { return su3_basis()[a] * m; }
  static El basis_right(const El& m, int a) { return m * su3_basis()[a]; }
  static void flatten(const El& p, double* out) {
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        out[6 * r + 2 * c] = p(r, c).real();
        out[6 * r + 2 * c + 1] = p(r, c).imag();
      }
    }
  }
  static void flatten_target(double defect, double* out) {
    for (int i = 0; i < 18; ++i) out[i] = 0.0;
    out[0] = out[8] = out[16] = defect;
  }
  static El step(const El& xcur, const double* d) {
    Mat3 e = Mat3::Zero();
    for (int a = 0; a < 8; ++a) e += d[a] * su3_basis()[a];
    return exp_antihermitian(e) * xcur;
  }
  static El haar(Rng& rng) { return haar_su3(rng); }
  static El clean(const El& x) { return project_su3(x); }
};

// ---- descent problem -------------------------------------------------------

template <class Ops>
struct Problem {
  using El = typename Ops::El;

  std::vector<CWord> relators;
  std::vector<double> defects;
  bool fold_sign = false;  // SO(3): residual up to the center
  std::vector<int> free_slots;
  int n_gens = 0;

  int resid_dim() const { return static_cast<int>(relators.size()) * Ops::kFlat; }
  int param_dim() const { return static_cast<int>(free_slots.size()) * Ops::kDim; }

  El eval(const std::vector<El>& v, const CWord& w) const {
    El acc = Ops::id();
    for (const auto& [g, e] : w) acc = Ops::mul(acc, e == 1 ? v[g] : Ops::inv(v[g]));
    return acc;
  }

  double relator_sign(const El& p, double defect) const {
    if (!fold_sign) return 1.0;
    double flat[Ops::kFlat];
    Ops::flatten(p, flat);
    return flat[0] * defect >= 0 ? 1.0 : -1.0;
  }

  void residual_vector(const std::vector<El>& v, Eigen::VectorXd& r) const {
    r.resize(resid_dim());
    double flat[Ops::kFlat], tgt[Ops::kFlat];
    for (std::size_t i = 0; i < relators.size(); ++i) {
      El p = eval(v, relators[i]);
      double s = relator_sign(p, defects[i]);
      Ops::flatten(p, flat);
      Ops::flatten_target(defects[i], tgt);
      for (int k = 0; k < Ops::kFlat; ++k) r(Ops::kFlat * i + k) = s * flat[k] - tgt[k];
    }
  }

  double max_relator_norm(const std::vector<El>& v) const {
    Eigen::VectorXd r;
    residual_vector(v, r);
    double worst = 0.0;
    for (std::size_t i = 0; i < relators.size(); ++i) {
      worst = std::max(worst, r.segment(Ops::kFlat * i, Ops::kFlat).norm());
    }
    return worst;
  }

  void jacobian(const std::vector<El>& v, Eigen::MatrixXd& J, Eigen::VectorXd& r) const {
    residual_vector(v, r);
    J.setZero(resid_dim(), param_dim());
    std::vector<int> slot_of(n_gens, -1);
    for (std::size_t s = 0; s < free_slots.size(); ++s) slot_of[free_slots[s]] = static_cast<int>(s);

    std::vector<El> letters, prefix, suffix;
    double flat[Ops::kFlat];
    for (std::size_t ri = 0; ri < relators.size(); ++ri) {
      const CWord& w = relators[ri];
      const int len = static_cast<int>(w.size());
      letters.assign(len, Ops::id());
      for (int i = 0; i < len; ++i) {
        letters[i] = w[i].second == 1 ? v[w[i].first] : Ops::inv(v[w[i].first]);
      }
      prefix.assign(len + 1, Ops::id());
      for (int i = 0; i < len; ++i) prefix[i + 1] = Ops::mul(prefix[i], letters[i]);
      suffix.assign(len + 1, Ops::id());
      for (int i = len - 1; i >= 0; --i) suffix[i] = Ops::mul(letters[i], suffix[i + 1]);

      double s = relator_sign(prefix[len], defects[ri]);
      for (int i = 0; i < len; ++i) {
        int slot = slot_of[w[i].first];
        if (slot < 0) continue;
        for (int a = 0; a < Ops::kDim; ++a) {
          El dm = w[i].second == 1 ? Ops::basis_left(a, letters[i])
                                   : Ops::basis_right(letters[i], a);
          El dp = Ops::mul(Ops::mul(prefix[i], dm), suffix[i + 1]);
          Ops::flatten(dp, flat);
          double sign = (w[i].second == 1 ? 1.0 : -1.0) * s;
          for (int k = 0; k < Ops::kFlat; ++k) {
            J(Ops::kFlat * ri + k, Ops::kDim * slot + a) += sign * flat[k];
          }
        }
      }
    }
  }

  void apply_step(std::vector<El>& v, const Eigen::VectorXd& d) const {
    for (std::size_t s = 0; s < free_slots.size(); ++s) {
      double buf[Ops::kDim];
      for (int a = 0; a < Ops::kDim; ++a) buf[a] = d(Ops::kDim * s + a);
      v[free_slots[s]] = Ops::step(v[free_slots[s]], buf);
    }
  }

  // projected gradient descent with backtracking line search
  void gradient_phase(std::vector<El>& v, int iters) const {
    Eigen::MatrixXd J;
    Eigen::VectorXd r;
    for (int it = 0; it < iters; ++it) {
      jacobian(v, J, r);
      double f = r.squaredNorm();
      if (f < kPolishTarget * kPolishTarget) return;
      Eigen::VectorXd g = 2.0 * J.transpose() * r;
      double gn2 = g.squaredNorm();
      if (gn2 < 1e-30) return;
      double alpha = 0.5 / std::sqrt(gn2 + 1.0);
      bool moved = false;
      for (int bt = 0; bt < 24; ++bt) {
        std::vector<El> trial = v;
        apply_step(trial, Eigen::VectorXd(-alpha * g));
        Eigen::VectorXd rt;
        residual_vector(trial, rt);
        if (rt.squaredNorm() < f) {
          v = std::move(trial);
          moved = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!moved) return;
    }
  }

  // Gauss-Newton with Levenberg damping
  double gauss_newton(std::vector<El>& v, int iters) const {
    Eigen::MatrixXd J;
    Eigen::VectorXd r;
    residual_vector(v, r);
    double f = r.squaredNorm();
    double lambda = 1e-6;
    for (int it = 0; it < iters; ++it) {
      if (max_relator_norm(v) < kPolishTarget) break;
      jacobian(v, J, r);
      Eigen::MatrixXd h = J.transpose() * J;
      Eigen::VectorXd g = J.transpose() * r;
      bool improved = false;
      for (int inner = 0; inner < 14; ++inner) {
        Eigen::MatrixXd hl = h;
        hl.diagonal().array() += lambda;
        Eigen::VectorXd d = hl.ldlt().solve(-g);
        std::vector<El> trial = v;
        apply_step(trial, d);
        Eigen::VectorXd rt;
        residual_vector(trial, rt);
        double ft = rt.squaredNorm();
        if (ft < f) {
          v = std::move(trial);
          f = ft;
          lambda = std::max(lambda * 0.25, 1e-14);
          improved = true;
          break;
        }
        lambda *= 10.0;
        if (lambda > 1e12) break;
      }
      if (!improved) break;
    }
    return std::sqrt(f);
  }
};

// ---- branches over central generators --------------------------------------

std::vector<int> central_generators(const Presentation& p) {
  const int n = static_cast<int>(p.generators.size());
  std::vector<std::vector<bool>> commuting(n, std::vector<bool>(n, false));
  for (const auto& rel : p.relators) {
    const auto& ls = rel.word.letters();
    if (ls.size() != 4) continue;
    if (ls[0].gen != ls[2].gen || ls[1].gen != ls[3].gen || ls[0].gen == ls[1].gen) continue;
    if (ls[0].exp != -ls[2].exp || ls[1].exp != -ls[3].exp) continue;
    int a = p.generator_index(ls[0].gen);
    int b = p.generator_index(ls[1].gen);
    commuting[a][b] = commuting[b][a] = true;
  }
  std::vector<int> central;
  for (int g = 0; g < n; ++g) {
    bool all = n > 1;
    for (int o = 0; o < n && all; ++o) {
      if (o != g && !commuting[g][o]) all = false;
    }
    if (all) central.push_back(g);
  }
  return central;
}

template <class El>
struct Branch {
  std::vector<std::pair<int, El>> fixed;
};

template <class Ops>
std::vector<Branch<typename Ops::El>> make_branches(const Presentation& p, Family family) {
  std::vector<typename Ops::El> centers;
  if constexpr (std::is_same_v<Ops, QuatOps>) {
    centers.push_back(Quat::identity());
    if (family == Family::su2) centers.push_back(-Quat::identity());
  } else {
    const std::complex<double> w = std::polar(1.0, 2.0 * M_PI / 3.0);
    centers.push_back(Mat3::Identity());
    centers.push_back(Mat3(w * Mat3::Identity()));
    centers.push_back(Mat3(w * w * Mat3::Identity()));
  }
  std::vector<int> central = central_generators(p);
  std::vector<Branch<typename Ops::El>> branches;
  if (!central.empty()) {
    const int k = static_cast<int>(central.size());
    int total = 1;
    for (int i = 0; i < k; ++i) total *= static_cast<int>(centers.size());
    for (int combo = 0; combo < total; ++combo) {
      Branch<typename Ops::El> br;
      int c = combo;
      for (int i = 0; i < k; ++i) {
        br.fixed.emplace_back(central[i], centers[c % centers.size()]);
        c /= static_cast<int>(centers.size());
      }
      branches.push_back(br);
    }
  }
  branches.push_back({});  // unconstrained branch
  return branches;
}

// ---- solve core -------------------------------------------------------------

struct Accepted {
  Representation rep;
  Fingerprint fp;
  double residual;
};

template <class Ops>
void run_restarts(const Presentation& p, Family family, const SolveConfig& cfg, int restarts,
                  std::vector<Accepted>& out) {
  Problem<Ops> pb;
  pb.n_gens = static_cast<int>(p.generators.size());
  pb.fold_sign = family == Family::so3;
  for (const auto& rel : p.relators) {
    pb.relators.push_back(compile_word(rel.word, p));
    if (family == Family::su3 && rel.defect != 1) {
      throw SolverError("central defect -1 has no SU(3) target (det(-I) = -1)");
    }
    pb.defects.push_back(static_cast<double>(rel.defect));
  }

  auto branches = make_branches<Ops>(p, family);
  for (int restart = 0; restart < restarts; ++restart) {
    for (std::size_t bi = 0; bi < branches.size(); ++bi) {
      Rng rng(Rng::mix(cfg.seed + static_cast<std::uint64_t>(restart), bi));
      std::vector<typename Ops::El> v(pb.n_gens, Ops::id());
      std::vector<bool> is_fixed(pb.n_gens, false);
      for (const auto& [g, val] : branches[bi].fixed) {
        v[g] = val;
        is_fixed[g] = true;
      }
      pb.free_slots.clear();
      for (int g = 0; g < pb.n_gens; ++g) {
        if (!is_fixed[g]) pb.free_slots.push_back(g);
      }
      for (int g : pb.free_slots) v[g] = Ops::haar(rng);

      pb.gradient_phase(v, cfg.descent_iters);
      pb.gauss_newton(v, cfg.polish_iters);
      for (auto& el : v) el = Ops::clean(el);

      // fresh evaluation pass, independent of the optimizer internals
      Representation rep(family, p.generators);
      for (int g = 0; g < pb.n_gens; ++g) {
        if constexpr (std::is_same_v<Ops, QuatOps>) {
          rep.set_quat(g, v[g]);
        } else {
          rep.set_mat(g, v[g]);
        }
      }
      double res = presentation_residual(rep, p);
      if (res <= cfg.accept_tol) {
        rep.set_residual(res);
        out.push_back(Accepted{rep, fingerprint(rep), res});
      }
    }
  }
}

struct Cluster {
  Fingerprint key;
  int best = -1;
  int hits = 0;
};

std::vector<RepClass> cluster_accepted(std::vector<Accepted>& acc, const SolveConfig& cfg) {
  std::vector<int> order(acc.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (fingerprint_less(acc[a].fp, acc[b].fp)) return true;
    if (fingerprint_less(acc[b].fp, acc[a].fp)) return false;
    return acc[a].residual < acc[b].residual;
  });

  std::vector<Cluster> clusters;
  for (int idx : order) {
    int home = -1;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (fingerprint_distance(acc[idx].fp, clusters[c].key) <= cfg.dedup_tol) {
        if (home >= 0) {
          throw ClusterPartitionError(
              "fingerprint clustering is not a partition at dedup_tol; classes overlap");
        }
        home = static_cast<int>(c);
      }
    }
    if (home < 0) {
      clusters.push_back(Cluster{acc[idx].fp, idx, 1});
    } else {
      Cluster& cl = clusters[home];
      ++cl.hits;
      if (acc[idx].residual < acc[cl.best].residual) cl.best = idx;
    }
  }
  for (std::size_t a = 0; a < clusters.size(); ++a) {
    for (std::size_t b = a + 1; b < clusters.size(); ++b) {
      if (fingerprint_distance(clusters[a].key, clusters[b].key) <= cfg.dedup_tol) {
        throw ClusterPartitionError("distinct classes within dedup_tol of each other");
      }
    }
  }

  std::vector<RepClass> classes;
  for (const auto& cl : clusters) {
    RepClass rc;
    rc.representative = acc[cl.best].rep;
    rc.fp = acc[cl.best].fp;
    rc.residual = acc[cl.best].residual;
    rc.hits = cl.hits;
    rc.commutant_dim = commutant_dimension(rc.representative);
    rc.stabilizer = stabilizer_label(rc.representative.family(), rc.commutant_dim);
    classes.push_back(std::move(rc));
  }
  std::sort(classes.begin(), classes.end(),
            [](const RepClass& a, const RepClass& b) { return fingerprint_less(a.fp, b.fp); });
  return classes;
}

bool trivial_is_admissible(const Presentation& p) {
  for (const auto& r : p.relators) {
    if (r.defect != 1) return false;
  }
  return true;
}

}  // namespace

SolveResult find_representations(const Presentation& p, Family family, const SolveConfig& cfg) {
  p.validate();
  cfg.validate();

  SolveResult result;
  int restarts = cfg.restarts;
  for (int round = 0;; ++round) {
    std::vector<Accepted> acc;
    if (family == Family::su3) {
      run_restarts<Su3Ops>(p, family, cfg, restarts, acc);
    } else {
      run_restarts<QuatOps>(p, family, cfg, restarts, acc);
    }
    result.classes = cluster_accepted(acc, cfg);
    result.restarts_used = restarts;

    int threshold = std::max(1, restarts / 50);  // 2% saturation heuristic
    bool starved = false;
    for (const auto& c : result.classes) {
      if (c.hits < threshold) starved = true;
    }
    if (starved && cfg.saturation_rerun && round == 0) {
      result.saturation_rerun_triggered = true;
      restarts *= 2;
      continue;
    }
    if (starved) {
      result.warnings.push_back("class hit-counts below the 2% saturation heuristic");
    }
    break;
  }

  if (trivial_is_admissible(p)) {
    Representation triv(family, p.generators);
    Fingerprint tfp = fingerprint(triv);
    bool found = false;
    for (const auto& c : result.classes) {
      if (fingerprint_distance(c.fp, tfp) <= cfg.dedup_tol) found = true;
    }
    if (!found) {
      result.warnings.push_back(
          "trivial representation is admissible but missing; restart coverage is suspect");
    }
  }
  return result;
}

std::vector<Representation> sample_representations(const Presentation& p, Family family,
                                                   int count, const SolveConfig& cfg) {
  p.validate();
  cfg.validate();
  std::vector<Representation> out;
  SolveConfig batch = cfg;
  const int chunk = std::max(8, count / 4);
  int offset = 0;
  while (static_cast<int>(out.size()) < count) {
    if (offset > 100 * (count + 10)) {
      throw SolverError("sampling stalled: accepted representations are too rare");
    }
    batch.seed = cfg.seed + static_cast<std::uint64_t>(offset) * 0x10001ULL;
    batch.restarts = chunk;
    std::vector<Accepted> acc;
    if (family == Family::su3) {
      run_restarts<Su3Ops>(p, family, batch, chunk, acc);
    } else {
      run_restarts<QuatOps>(p, family, batch, chunk, acc);
    }
    for (auto& a : acc) {
      if (static_cast<int>(out.size()) < count) out.push_back(std::move(a.rep));
    }
    offset += chunk;
  }
  return out;
}

namespace {

template <class Ops>
struct ConjProblem {
  using El = typename Ops::El;
  std::vector<El> source, target;
  bool fold_sign = false;

  int resid_dim() const { return static_cast<int>(source.size()) * Ops::kFlat; }

  void residual_vector(const El& c, Eigen::VectorXd& r) const {
    r.resize(resid_dim());
    double flat[Ops::kFlat], tgt[Ops::kFlat];
    for (std::size_t i = 0; i < source.size(); ++i) {
      El x = Ops::mul(Ops::mul(c, source[i]), Ops::inv(c));
      Ops::flatten(x, flat);
      Ops::flatten(target[i], tgt);
      double s = 1.0;
      if (fold_sign) {
        double dot = 0.0;
        for (int k = 0; k < Ops::kFlat; ++k) dot += flat[k] * tgt[k];
        s = dot >= 0 ? 1.0 : -1.0;
      }
      for (int k = 0; k < Ops::kFlat; ++k) r(Ops::kFlat * i + k) = s * flat[k] - tgt[k];
    }
  }

  double max_norm(const El& c) const {
    Eigen::VectorXd r;
    residual_vector(c, r);
    double worst = 0.0;
    for (std::size_t i = 0; i < source.size(); ++i) {
      worst = std::max(worst, r.segment(Ops::kFlat * i, Ops::kFlat).norm());
    }
    return worst;
  }

  void jacobian(const El& c, Eigen::MatrixXd& J, Eigen::VectorXd& r) const {
    residual_vector(c, r);
    J.setZero(resid_dim(), Ops::kDim);
    double flat[Ops::kFlat], tgt[Ops::kFlat];
    for (std::size_t i = 0; i < source.size(); ++i) {
      El x = Ops::mul(Ops::mul(c, source[i]), Ops::inv(c));
      double s = 1.0;
      if (fold_sign) {
        Ops::flatten(x, flat);
        Ops::flatten(target[i], tgt);
        double dot = 0.0;
        for (int k = 0; k < Ops::kFlat; ++k) dot += flat[k] * tgt[k];
        s = dot >= 0 ? 1.0 : -1.0;
      }
      for (int a = 0; a < Ops::kDim; ++a) {
        El dp = Ops::basis_left(a, x);
        El dm = Ops::basis_right(x, a);
        Ops::flatten(dp, flat);
        Ops::flatten(dm, tgt);
        for (int k = 0; k < Ops::kFlat; ++k) {
          J(Ops::kFlat * i + k, a) = s * (flat[k] - tgt[k]);
        }
      }
    }
  }

  double minimize(El& c, int iters) const {
    Eigen::MatrixXd J;
    Eigen::VectorXd r;
    residual_vector(c, r);
    double f = r.squaredNorm();
    double lambda = 1e-6;
    for (int it = 0; it < iters; ++it) {
      if (max_norm(c) < kPolishTarget) break;
      jacobian(c, J, r);
      Eigen::MatrixXd h = J.transpose() * J;
      Eigen::VectorXd g = J.transpose() * r;
      bool improved = false;
      for (int inner = 0; inner < 14; ++inner) {
        Eigen::MatrixXd hl = h;
        hl.diagonal().array() += lambda;
        Eigen::VectorXd d = hl.ldlt().solve(-g);
        double buf[Ops::kDim];
        for (int a = 0; a < Ops::kDim; ++a) buf[a] = d(a);
        El trial = Ops::clean(Ops::step(c, buf));
        Eigen::VectorXd rt;
        residual_vector(trial, rt);
        double ft = rt.squaredNorm();
        if (ft < f) {
          c = trial;
          f = ft;
          lambda = std::max(lambda * 0.25, 1e-14);
          improved = true;
          break;
        }
        lambda *= 10.0;
        if (lambda > 1e12) break;
      }
      if (!improved) break;
    }
    return max_norm(c);
  }
};

template <class Ops>
Conjugator conjugator_search(const Representation& rho, const Representation& sigma,
                             const SolveConfig& cfg) {
  ConjProblem<Ops> pb;
  pb.fold_sign = rho.family() == Family::so3;
  for (int i = 0; i < static_cast<int>(rho.generators().size()); ++i) {
    if constexpr (std::is_same_v<Ops, QuatOps>) {
      pb.source.push_back(rho.quat(i));
      pb.target.push_back(sigma.quat(i));
    } else {
      pb.source.push_back(rho.mat(i));
      pb.target.push_back(sigma.mat(i));
    }
  }

  Conjugator best;
  best.family = rho.family();
  best.residual = std::numeric_limits<double>::infinity();
  auto record = [&](const typename Ops::El& c, double res) {
    if (res < best.residual) {
      best.residual = res;
      if constexpr (std::is_same_v<Ops, QuatOps>) {
        best.q = c;
      } else {
        best.m = c;
      }
    }
  };

  // convention: the identity wins outright when it already works
  {
    typename Ops::El c = Ops::id();
    double res = pb.max_norm(c);
    if (res <= cfg.accept_tol) {
      record(c, res);
      return best;
    }
    record(c, pb.minimize(c, 80));
    if (best.residual <= cfg.accept_tol) return best;
  }
  Rng rng(Rng::mix(cfg.seed, 0xC0171ULL));
  for (int attempt = 0; attempt < 16; ++attempt) {
    typename Ops::El c = Ops::haar(rng);
    double res = pb.minimize(c, 80);
    record(c, res);
    if (best.residual <= cfg.accept_tol) return best;
  }
  throw NotConjugateError("no conjugating element found (best residual " +
                              std::to_string(best.residual) + ")",
                          best.residual);
}

}  // namespace

Conjugator find_conjugator(const Representation& rho, const Representation& sigma,
                           const SolveConfig& cfg) {
  if (rho.family() != sigma.family()) throw SolverError("conjugacy across families");
  if (rho.generators() != sigma.generators()) {
    throw SolverError("conjugacy needs matching generator lists");
  }
  double fp_gap = fingerprint_distance(fingerprint(rho), fingerprint(sigma));
  if (fp_gap > cfg.dedup_tol) {
    throw NotConjugateError(
        "fingerprints differ by " + std::to_string(fp_gap) + "; not conjugate", fp_gap);
  }
  if (rho.family() == Family::su3) return conjugator_search<Su3Ops>(rho, sigma, cfg);
  return conjugator_search<QuatOps>(rho, sigma, cfg);
}

std::vector<Conjugator> enumerate_conjugators(const Representation& rho,
                                              const Representation& sigma,
                                              const SolveConfig& cfg, int starts) {
  if (rho.family() != sigma.family()) throw SolverError("conjugacy across families");
  if (rho.generators() != sigma.generators()) {
    throw SolverError("conjugacy needs matching generator lists");
  }
  if (rho.family() == Family::su3) {
    throw SolverError("conjugator enumeration is only provided for quaternionic families");
  }
  ConjProblem<QuatOps> pb;
  pb.fold_sign = rho.family() == Family::so3;
  for (int i = 0; i < static_cast<int>(rho.generators().size()); ++i) {
    pb.source.push_back(rho.quat(i));
    pb.target.push_back(sigma.quat(i));
  }
  std::vector<Conjugator> found;
  Rng rng(Rng::mix(cfg.seed, 0xE11BULL));
  for (int attempt = 0; attempt < starts; ++attempt) {
    Quat c = attempt == 0 ? Quat::identity() : haar_su2(rng);
    double res = pb.minimize(c, 120);
    if (res > cfg.accept_tol) continue;
    bool fresh = true;
    for (const auto& known : found) {
      if (quat_dist(c, known.q) <= 1e-6) fresh = false;
    }
    if (fresh) {
      Conjugator conj;
      conj.family = rho.family();
      conj.q = c;
      conj.residual = res;
      found.push_back(conj);
    }
  }
  std::sort(found.begin(), found.end(), [](const Conjugator& a, const Conjugator& b) {
    if (a.q.w != b.q.w) return a.q.w < b.q.w;
    if (a.q.x != b.q.x) return a.q.x < b.q.x;
    if (a.q.y != b.q.y) return a.q.y < b.q.y;
    return a.q.z < b.q.z;
  });
  return found;
}

double conjugation_residual(const Representation& rho, const Representation& sigma,
                            const Conjugator& c) {
  double worst = 0.0;
  for (int i = 0; i < static_cast<int>(rho.generators().size()); ++i) {
    if (rho.family() == Family::su3) {
      worst = std::max(worst, (c.m * rho.mat(i) * c.m.adjoint() - sigma.mat(i)).norm());
    } else {
      Quat x = c.q * rho.quat(i) * c.q.inverse();
      double d = rho.family() == Family::so3 ? projective_dist(x, sigma.quat(i))
                                             : quat_dist(x, sigma.quat(i));
      worst = std::max(worst, d);
    }
  }
  return worst;
}

int rotation_number_count(const SeifertData& d) {
  if (d.multiplicities.size() != 3 || d.b.size() != 3) {
    throw BadMultiplicitiesError("rotation-number count needs exactly 3 fibers");
  }
  const long long a1 = d.multiplicities[0], a2 = d.multiplicities[1], a3 = d.multiplicities[2];
  if (a1 < 1 || a2 < 1 || a3 < 1) throw BadMultiplicitiesError("multiplicities must be positive");
  if (std::gcd(a1, a2) != 1 || std::gcd(a1, a3) != 1 || std::gcd(a2, a3) != 1) {
    throw BadMultiplicitiesError("multiplicities must be pairwise coprime");
  }
  const long long D = a1 * a2 * a3;
  int count = 0;
  for (int m = 0; m <= 1; ++m) {
    // h -> (-1)^m; x_i^{a_i} = h^{-b_i} forces angle parity, the product
    // relator fixes the sign of x1 x2 x3
    bool sigma_plus = ((m * d.euler) % 2) == 0;
    for (long long l1 = 1; l1 < a1; ++l1) {
      if (((l1 - m * d.b[0]) % 2 + 2) % 2 != 0) continue;
      for (long long l2 = 1; l2 < a2; ++l2) {
        if (((l2 - m * d.b[1]) % 2 + 2) % 2 != 0) continue;
        for (long long l3 = 1; l3 < a3; ++l3) {
          if (((l3 - m * d.b[2]) % 2 + 2) % 2 != 0) continue;
          // angles scaled by D: theta_i = pi l_i / a_i
          long long t1 = l1 * a2 * a3;
          long long t2 = l2 * a1 * a3;
          long long t3 = sigma_plus ? l3 * a1 * a2 : D - l3 * a1 * a2;
          long long lo = std::abs(t1 - t2);
          long long hi = std::min(t1 + t2, 2 * D - t1 - t2);
          if (lo < t3 && t3 < hi) ++count;
        }
      }
    }
  }
  return count;
}

namespace {

long long mod_inverse(long long a, long long n) {
  long long t = 0, nt = 1, r = n, nr = ((a % n) + n) % n;
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return ((t % n) + n) % n;
}

}  // namespace

SeifertData brieskorn_data(int a1, int a2, int a3) {
  std::vector<long long> a{a1, a2, a3};
  if (std::gcd(a[0], a[1]) != 1 || std::gcd(a[0], a[2]) != 1 || std::gcd(a[1], a[2]) != 1) {
    throw BadMultiplicitiesError("Brieskorn data needs pairwise coprime multiplicities");
  }
  long long A = a[0] * a[1] * a[2];
  std::vector<int> b(3);
  long long sum = 0;
  for (int i = 0; i < 3; ++i) {
    long long Bi = A / a[i];
    long long bi = ((-mod_inverse(Bi, a[i])) % a[i] + a[i]) % a[i];
    b[i] = static_cast<int>(bi);
    sum += Bi * bi;
  }
  // product relator x1 x2 x3 = h^e with A*(-e) - sum = -1 => e = -(1+sum)/A
  long long numer = 1 + sum;
  if (numer % A != 0) throw BadSeifertDataError("homology-sphere data has no integer solution");
  SeifertData d;
  d.multiplicities = {a1, a2, a3};
  d.b = b;
  d.euler = static_cast<int>(-numer / A);
  return d;
}

Representation reordered(const Representation& rho, const std::vector<std::string>& generators) {
  Representation out(rho.family(), generators);
  for (int i = 0; i < static_cast<int>(generators.size()); ++i) {
    int j = rho.index_of(generators[i]);
    if (rho.family() == Family::su3) {
      out.set_mat(i, rho.mat(j));
    } else {
      out.set_quat(i, rho.quat(j));
    }
  }
  out.set_residual(rho.residual());
  return out;
}

}  // namespace mutlab
