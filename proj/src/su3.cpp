#include "mutlab/su3.hpp"

#include <cmath>

namespace mutlab {

using Cx = std::complex<double>;

double unitary_residual(const Mat3& u) {
  return (u.adjoint() * u - Mat3::Identity()).norm();
}

double special_residual(const Mat3& u) { return std::abs(u.determinant() - Cx(1, 0)); }

Mat3 project_su3(const Mat3& a) {
  Eigen::JacobiSVD<Mat3> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 u = svd.matrixU() * svd.matrixV().adjoint();
  Cx d = u.determinant();
  double phase = std::arg(d);
  u *= std::polar(1.0, -phase / 3.0);
  return u;
}

Mat3 exp_antihermitian(const Mat3& a) {
  // a = iH with H Hermitian; exp(a) = V exp(i diag) V*
  Mat3 h = a / Cx(0, 1);
  Eigen::SelfAdjointEigenSolver<Mat3> es(h);
  Eigen::Vector3d ev = es.eigenvalues();
  Mat3 d = Mat3::Zero();
  for (int i = 0; i < 3; ++i) d(i, i) = std::polar(1.0, ev(i));
  return es.eigenvectors() * d * es.eigenvectors().adjoint();
}

const std::array<Mat3, 8>& su3_basis() {
  static const std::array<Mat3, 8> basis = [] {
    std::array<Mat3, 8> b;
    const Cx i(0, 1);
    const double s3 = 1.0 / std::sqrt(3.0);
    for (auto& m : b) m = Mat3::Zero();
    b[0](0, 1) = i;      b[0](1, 0) = i;                          // i*lambda1
    b[1](0, 1) = 1;      b[1](1, 0) = -1;                         // i*lambda2
    b[2](0, 0) = i;      b[2](1, 1) = -i;                         // i*lambda3
    b[3](0, 2) = i;      b[3](2, 0) = i;                          // i*lambda4
    b[4](0, 2) = 1;      b[4](2, 0) = -1;                         // i*lambda5
    b[5](1, 2) = i;      b[5](2, 1) = i;                          // i*lambda6
    b[6](1, 2) = 1;      b[6](2, 1) = -1;                         // i*lambda7
    b[7](0, 0) = i * s3; b[7](1, 1) = i * s3; b[7](2, 2) = -2.0 * i * s3;  // i*lambda8
    return b;
  }();
  return basis;
}

Mat3 haar_su3(Rng& rng) {
  Mat3 a;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) a(r, c) = Cx(rng.gaussian(), rng.gaussian());
  }
  Eigen::HouseholderQR<Mat3> qr(a);
  Mat3 q = qr.householderQ();
  Mat3 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 3; ++i) {
    Cx d = r(i, i);
    double ad = std::abs(d);
    q.col(i) *= (ad > 0 ? d / ad : Cx(1, 0));
  }
  // U(3) Haar to SU(3) Haar: divide out a cube root of the determinant
  double phase = std::arg(q.determinant());
  q *= std::polar(1.0, -phase / 3.0);
  return q;
}

}  // namespace mutlab
