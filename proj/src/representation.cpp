#include "mutlab/representation.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "mutlab/errors.hpp"

namespace mutlab {

std::string family_name(Family f) {
  switch (f) {
    case Family::su2: return "su2";
    case Family::so3: return "so3";
    case Family::su3: return "su3";
  }
  return "su2";
}

Family family_from_name(const std::string& s) {
  if (s == "su2") return Family::su2;
  if (s == "so3") return Family::so3;
  if (s == "su3") return Family::su3;
  throw Error("unknown group family: " + s);
}

Representation::Representation(Family family, std::vector<std::string> generators)
    : family_(family), generators_(std::move(generators)) {
  if (family_ == Family::su3) {
    mats_.assign(generators_.size(), Mat3::Identity());
  } else {
    quats_.assign(generators_.size(), Quat::identity());
  }
}

int Representation::index_of(const std::string& gen) const {
  auto it = std::find(generators_.begin(), generators_.end(), gen);
  if (it == generators_.end()) throw UnknownGeneratorError("representation misses generator: " + gen);
  return static_cast<int>(it - generators_.begin());
}

Quat evaluate_quat(const Representation& rho, const Word& w) {
  Quat acc = Quat::identity();
  int chain = 0;
  for (const Letter& l : w.letters()) {
    const Quat& q = rho.quat(l.gen);
    acc = acc * (l.exp == 1 ? q : q.inverse());
    if (++chain > 32) {
      acc = acc.normalized();
      chain = 0;
    }
  }
  return acc;
}

Mat3 evaluate_su3(const Representation& rho, const Word& w) {
  Mat3 acc = Mat3::Identity();
  for (const Letter& l : w.letters()) {
    const Mat3& m = rho.mat(l.gen);
    acc = acc * (l.exp == 1 ? m : Mat3(m.adjoint()));
  }
  return acc;
}

std::complex<double> trace_of(const Representation& rho, const Word& w) {
  switch (rho.family()) {
    case Family::su2: return trace_su2(evaluate_quat(rho, w));
    case Family::so3: return trace_so3(evaluate_quat(rho, w));
    case Family::su3: return evaluate_su3(rho, w).trace();
  }
  return 0.0;
}

double relator_residual(const Representation& rho, const Relator& r) {
  if (rho.family() == Family::su3) {
    if (r.defect != 1) {
      throw SolverError("central defect -1 has no SU(3) target (det(-I) = -1)");
    }
    return (evaluate_su3(rho, r.word) - Mat3::Identity()).norm();
  }
  Quat p = evaluate_quat(rho, r.word);
  if (rho.family() == Family::so3) {
    Quat id = Quat::identity();
    return std::min(quat_dist(p, id), quat_dist(-p, id));
  }
  Quat target = r.defect == 1 ? Quat::identity() : -Quat::identity();
  return quat_dist(p, target);
}

double presentation_residual(const Representation& rho, const Presentation& p) {
  double worst = 0.0;
  for (const auto& r : p.relators) worst = std::max(worst, relator_residual(rho, r));
  return worst;
}

std::vector<Word> canonical_word_list(const std::vector<std::string>& gens) {
  const int n = static_cast<int>(gens.size());
  std::vector<Word> words;
  for (int i = 0; i < n; ++i) words.push_back(Word::generator(gens[i]));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      words.push_back(Word::generator(gens[i]) * Word::generator(gens[j]));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        words.push_back(Word::generator(gens[i]) * Word::generator(gens[j]) *
                        Word::generator(gens[k]));
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Word a = Word::generator(gens[i]), b = Word::generator(gens[j]);
      words.push_back(a * b * a.inverse() * b.inverse());
    }
  }
  return words;
}

Fingerprint fingerprint(const Representation& rho) {
  Fingerprint f;
  for (const Word& w : canonical_word_list(rho.generators())) {
    f.traces.push_back(trace_of(rho, w));
  }
  return f;
}

double fingerprint_distance(const Fingerprint& a, const Fingerprint& b) {
  if (a.traces.size() != b.traces.size()) {
    throw Error("fingerprint length mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.traces.size(); ++i) {
    worst = std::max(worst, std::abs(a.traces[i] - b.traces[i]));
  }
  return worst;
}

bool fingerprint_less(const Fingerprint& a, const Fingerprint& b) {
  for (std::size_t i = 0; i < std::min(a.traces.size(), b.traces.size()); ++i) {
    if (a.traces[i].real() != b.traces[i].real()) return a.traces[i].real() < b.traces[i].real();
    if (a.traces[i].imag() != b.traces[i].imag()) return a.traces[i].imag() < b.traces[i].imag();
  }
  return a.traces.size() < b.traces.size();
}

Fingerprint conjugate(const Fingerprint& f) {
  Fingerprint out;
  out.traces.reserve(f.traces.size());
  for (const auto& t : f.traces) out.traces.push_back(std::conj(t));
  return out;
}

namespace {

Vec3 commutator_su2(const Vec3& xv, const Quat& q) {
  Quat x{0, xv.x, xv.y, xv.z};
  Quat c = x * q;
  Quat d = q * x;
  return {c.x - d.x, c.y - d.y, c.z - d.z};
}

}  // namespace

int commutant_dimension(const Representation& rho, double rel_threshold) {
  const int n = static_cast<int>(rho.generators().size());
  if (rho.family() != Family::su3) {
    Eigen::MatrixXd op(3 * n, 3);
    const Vec3 basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int a = 0; a < 3; ++a) {
      for (int g = 0; g < n; ++g) {
        Vec3 c = commutator_su2(basis[a], rho.quat(g));
        op(3 * g + 0, a) = c.x;
        op(3 * g + 1, a) = c.y;
        op(3 * g + 2, a) = c.z;
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(op);
    auto sv = svd.singularValues();
    double top = sv.size() ? sv(0) : 0.0;
    if (top < 1e-12) return 3;  // image central: full commutant
    int dim = 0;
    for (int i = 0; i < sv.size(); ++i) {
      if (sv(i) < rel_threshold * top) ++dim;
    }
    return dim;
  }
  Eigen::MatrixXd op(18 * n, 8);
  const auto& basis = su3_basis();
  for (int a = 0; a < 8; ++a) {
    for (int g = 0; g < n; ++g) {
      Mat3 c = basis[a] * rho.mat(g) - rho.mat(g) * basis[a];
      for (int r = 0; r < 3; ++r) {
        for (int col = 0; col < 3; ++col) {
          op(18 * g + 6 * r + 2 * col + 0, a) = c(r, col).real();
          op(18 * g + 6 * r + 2 * col + 1, a) = c(r, col).imag();
        }
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(op);
  auto sv = svd.singularValues();
  double top = sv.size() ? sv(0) : 0.0;
  if (top < 1e-12) return 8;
  int dim = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) < rel_threshold * top) ++dim;
  }
  return dim;
}

std::string stabilizer_label(Family family, int dim) {
  if (family == Family::su3) return dim == 0 ? "irreducible" : "reducible";
  switch (dim) {
    case 0: return "irreducible";  // stabilizer is the center
    case 1: return "U(1)";
    case 3: return "central";      // stabilizer is the whole group
    default: return "reducible";
  }
}

Representation haar_representation(Family family, const std::vector<std::string>& generators,
                                   Rng& rng) {
  Representation rho(family, generators);
  for (int i = 0; i < static_cast<int>(generators.size()); ++i) {
    if (family == Family::su3) {
      rho.set_mat(i, haar_su3(rng));
    } else {
      rho.set_quat(i, haar_su2(rng));
    }
  }
  return rho;
}

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

ojson representation_to_json(const Representation& rho) {
  ojson assignments;
  for (int i = 0; i < static_cast<int>(rho.generators().size()); ++i) {
    const auto& g = rho.generators()[i];
    if (rho.family() == Family::su3) {
      std::vector<double> v;
      const Mat3& m = rho.mat(i);
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          v.push_back(m(r, c).real());
          v.push_back(m(r, c).imag());
        }
      }
      assignments[g] = v;
    } else {
      const Quat& q = rho.quat(i);
      assignments[g] = std::vector<double>{q.w, q.x, q.y, q.z};
    }
  }
  ojson j;
  j["family"] = family_name(rho.family());
  j["assignments"] = assignments;
  j["residual"] = rho.residual();
  return j;
}

Representation representation_from_json(const json& j) {
  Family family = family_from_name(j.at("family").get<std::string>());
  std::vector<std::string> gens;
  for (const auto& [g, v] : j.at("assignments").items()) {
    gens.push_back(g);
    (void)v;
  }
  Representation rho(family, gens);
  for (const auto& [g, v] : j.at("assignments").items()) {
    auto nums = v.get<std::vector<double>>();
    if (family == Family::su3) {
      if (nums.size() != 18) throw IoError("SU(3) assignment needs 18 numbers: " + g);
      Mat3 m;
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          m(r, c) = std::complex<double>(nums[6 * r + 2 * c], nums[6 * r + 2 * c + 1]);
        }
      }
      if (unitary_residual(m) > 1e-8 || special_residual(m) > 1e-8) {
        throw IoError("assignment is not special-unitary: " + g);
      }
      rho.set_mat(g, project_su3(m));
    } else {
      if (nums.size() != 4) throw IoError("quaternion assignment needs 4 numbers: " + g);
      Quat q{nums[0], nums[1], nums[2], nums[3]};
      if (std::abs(q.norm() - 1.0) > 1e-8) throw IoError("assignment is not a unit quaternion: " + g);
      rho.set_quat(g, q.normalized());
    }
  }
  rho.set_residual(j.value("residual", 0.0));
  return rho;
}

Representation load_representation(const std::string& path) {
  return representation_from_json(load_json(path));
}

}  // namespace mutlab
