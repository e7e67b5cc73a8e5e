#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <complex>

#include <weylspectra/errors.hpp>

namespace weylspectra {

/// Numerical rank: number of singular values above rel_tol times the largest.
/// The zero matrix has rank 0.
template <typename Scalar>
int rank_tol(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& M,
             double rel_tol = 1e-8) {
  if (!(rel_tol > 0.0)) throw InvalidArgument("rank tolerance must be positive");
  if (M.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> svd(M);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  if (smax == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > rel_tol * smax) ++r;
  return r;
}

}  // namespace weylspectra
