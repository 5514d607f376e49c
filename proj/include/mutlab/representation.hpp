#pragma once

#include <complex>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mutlab/presentation.hpp"
#include "mutlab/quaternion.hpp"
#include "mutlab/su3.hpp"

namespace mutlab {

enum class Family { su2, so3, su3 };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

// Assignment of generators to group elements.  SU(2) and SO(3) elements are
// unit quaternions (SO(3) through the double cover: traces and equality are
// sign-blind, products are plain quaternion products).  SU(3) elements are
// 3x3 special-unitary matrices.
class Representation {
 public:
  Representation() = default;
  Representation(Family family, std::vector<std::string> generators);

  Family family() const { return family_; }
  const std::vector<std::string>& generators() const { return generators_; }
  int index_of(const std::string& gen) const;  // throws UnknownGeneratorError
  bool is_quaternionic() const { return family_ != Family::su3; }

  const Quat& quat(int i) const { return quats_[i]; }
  const Quat& quat(const std::string& gen) const { return quats_[index_of(gen)]; }
  void set_quat(int i, const Quat& q) { quats_[i] = q; }
  void set_quat(const std::string& gen, const Quat& q) { quats_[index_of(gen)] = q; }

  const Mat3& mat(int i) const { return mats_[i]; }
  const Mat3& mat(const std::string& gen) const { return mats_[index_of(gen)]; }
  void set_mat(int i, const Mat3& m) { mats_[i] = m; }
  void set_mat(const std::string& gen, const Mat3& m) { mats_[index_of(gen)] = m; }

  double residual() const { return residual_; }
  void set_residual(double r) { residual_ = r; }

 private:
  Family family_ = Family::su2;
  std::vector<std::string> generators_;
  std::vector<Quat> quats_;
  std::vector<Mat3> mats_;
  double residual_ = 0.0;
};

// Left-to-right holonomy of a word.  Quaternion chains renormalize every 32
// products to hold the unit-norm invariant.
Quat evaluate_quat(const Representation& rho, const Word& w);
Mat3 evaluate_su3(const Representation& rho, const Word& w);

// su2: 2w; so3: 4w^2-1; su3: complex matrix trace
std::complex<double> trace_of(const Representation& rho, const Word& w);

// ||rho(r) - defect*I||; Frobenius for SU(3), 4-vector norm for quaternions,
// sign-folded for SO(3)
double relator_residual(const Representation& rho, const Relator& r);
double presentation_residual(const Representation& rho, const Presentation& p);  // max

// Canonical trace word list (the conjugacy-class key; fixed, versioned):
// generators, ordered pairs g*h, ordered triples of distinct generators,
// commutators [g,h] for ordered distinct pairs; in generator order.
std::vector<Word> canonical_word_list(const std::vector<std::string>& generators);

struct Fingerprint {
  std::vector<std::complex<double>> traces;
};

Fingerprint fingerprint(const Representation& rho);
double fingerprint_distance(const Fingerprint& a, const Fingerprint& b);  // max entry gap
bool fingerprint_less(const Fingerprint& a, const Fingerprint& b);        // lexicographic
Fingerprint conjugate(const Fingerprint& f);

// dimension of {X in the Lie algebra : [X, rho(g)] = 0 for all generators},
// by singular-value thresholding of the stacked commutator operator
int commutant_dimension(const Representation& rho, double rel_threshold = 1e-6);
std::string stabilizer_label(Family family, int commutant_dim);

Representation haar_representation(Family family, const std::vector<std::string>& generators,
                                   Rng& rng);

// JSON (External Interfaces): {"family": "su2"|"so3"|"su3",
// "assignments": {gen: [numbers]}, "residual": float}; quaternions as
// [w,x,y,z], SU(3) row-major re,im pairs.
nlohmann::ordered_json representation_to_json(const Representation& rho);
Representation representation_from_json(const nlohmann::json& j);
Representation load_representation(const std::string& path);

}  // namespace mutlab
