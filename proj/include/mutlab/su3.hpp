#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "mutlab/rng.hpp"

namespace mutlab {

using Mat3 = Eigen::Matrix3cd;

// ||U*U - I||_F
double unitary_residual(const Mat3& u);
double special_residual(const Mat3& u);  // |det(u) - 1|

// nearest special-unitary matrix: unitary polar factor, det phase folded in
Mat3 project_su3(const Mat3& a);

// exp of an anti-Hermitian matrix via the spectral decomposition of -iA
Mat3 exp_antihermitian(const Mat3& a);

// fixed orthogonal basis of su(3) (anti-Hermitian traceless), i times the
// standard Gell-Mann matrices
const std::array<Mat3, 8>& su3_basis();

Mat3 haar_su3(Rng& rng);

}  // namespace mutlab
