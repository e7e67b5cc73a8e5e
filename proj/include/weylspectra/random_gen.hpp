#pragma once

#include <random>
#include <vector>

#include <weylspectra/builders.hpp>
#include <weylspectra/sampling.hpp>

namespace weylspectra {

/// Deterministic generators for random spaces, endomorphisms and curvature
/// tensors.  Used by the conjecture explorer and by the test fixtures; all
/// draws come from a caller-owned RNG so runs replay exactly.

/// Random well-conditioned symmetric gram of the given signature:
/// Q^T diag(+-d_i) Q with d_i in [0.5, 2] and Q Haar-ish orthogonal.
inline InnerProduct random_inner_product(std::mt19937_64& rng, Signature sig) {
  const int m = sig.dim();
  std::normal_distribution<double> nd(0.0, 1.0);
  Eigen::MatrixXd X(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) X(i, j) = nd(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(X);
  Eigen::MatrixXd Q = qr.householderQ();
  std::uniform_real_distribution<double> ud(0.5, 2.0);
  Eigen::VectorXd d(m);
  for (int i = 0; i < m; ++i) d[i] = (i < sig.p ? -1.0 : 1.0) * ud(rng);
  Eigen::MatrixXd G = Q.transpose() * d.asDiagonal() * Q;
  G = 0.5 * (G + G.transpose());
  return InnerProduct(std::move(G), sig);
}

/// Random g-self-adjoint endomorphism: g^{-1} S with S symmetric.
inline Eigen::MatrixXd random_self_adjoint(std::mt19937_64& rng, const InnerProduct& g) {
  const int m = g.dim();
  std::normal_distribution<double> nd(0.0, 1.0);
  Eigen::MatrixXd S(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) S(i, j) = S(j, i) = nd(rng);
  return g.gram_inverse() * S;
}

/// Random valid algebraic curvature tensor: a short linear combination of
/// tensors of self-adjoint endomorphisms (these span the curvature space).
inline CurvatureTensor random_curvature_tensor(std::mt19937_64& rng,
                                               const InnerProduct& g, int nterms = 3) {
  std::uniform_real_distribution<double> cd(-1.5, 1.5);
  CurvatureTensor A(g);
  for (int t = 0; t < nterms; ++t) {
    const double c = cd(rng);
    A += c * a_phi_tensor(g, random_self_adjoint(rng, g));
  }
  return A;
}

/// A random non-degenerate change of basis: orthogonal times a mild diagonal
/// stretch, so conjugated models stay well-conditioned.
inline Eigen::MatrixXd random_basis_change(std::mt19937_64& rng, int m) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Eigen::MatrixXd X(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) X(i, j) = nd(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(X);
  Eigen::MatrixXd Q = qr.householderQ();
  std::uniform_real_distribution<double> ud(0.7, 1.4);
  Eigen::VectorXd d(m);
  for (int i = 0; i < m; ++i) d[i] = ud(rng);
  return Q * d.asDiagonal();
}

/// Model pair (G0, phi0) conjugated by a random basis change:
/// phi = S phi0 S^{-1} self-adjoint with respect to G = S^{-T} G0 S^{-1},
/// preserving phi0's algebraic type (isometry, para-isometry, nilpotent).
struct GeneratorModel {
  InnerProduct space;
  Eigen::MatrixXd phi;
};

inline GeneratorModel conjugated_model(std::mt19937_64& rng, const Eigen::MatrixXd& G0,
                                       Signature sig, const Eigen::MatrixXd& phi0) {
  const int m = sig.dim();
  const Eigen::MatrixXd S = random_basis_change(rng, m);
  const Eigen::MatrixXd Sinv = S.inverse();
  Eigen::MatrixXd G = Sinv.transpose() * G0 * Sinv;
  G = 0.5 * (G + G.transpose());
  return GeneratorModel{InnerProduct(std::move(G), sig), S * phi0 * Sinv};
}

/// phi^2 = Id with a +1-eigenspace of dimension aplus (isometry type).
inline GeneratorModel random_isometry_model(std::mt19937_64& rng, Signature sig,
                                            int aplus) {
  const int m = sig.dim();
  if (aplus < 0 || aplus > m) throw InvalidArgument("eigenspace split out of range");
  Eigen::MatrixXd G0 = InnerProduct::standard(sig).gram();
  Eigen::VectorXd d(m);
  for (int i = 0; i < m; ++i) d[i] = i < aplus ? 1.0 : -1.0;
  // Diagonal phi0 commutes with the diagonal G0, hence is self-adjoint.
  return conjugated_model(rng, G0, sig, Eigen::MatrixXd(d.asDiagonal()));
}

/// phi^2 = -Id on the neutral space of dimension 2k (para-isometry type).
inline GeneratorModel random_para_isometry_model(std::mt19937_64& rng, int k) {
  const int m = 2 * k;
  Eigen::MatrixXd G0 = Eigen::MatrixXd::Zero(m, m);
  Eigen::MatrixXd phi0 = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < k; ++i) {
    G0(i, k + i) = G0(k + i, i) = 1.0;
    phi0(i, k + i) = -1.0;
    phi0(k + i, i) = 1.0;
  }
  return conjugated_model(rng, G0, Signature::neutral(k), phi0);
}

/// phi^2 = 0 on the neutral space of dimension 2k (nilpotent type).
inline GeneratorModel random_nilpotent_model(std::mt19937_64& rng, int k) {
  const int m = 2 * k;
  Eigen::MatrixXd G0 = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < k; ++i) G0(i, k + i) = G0(k + i, i) = 1.0;
  std::normal_distribution<double> nd(0.0, 1.0);
  Eigen::MatrixXd N(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) N(i, j) = N(j, i) = nd(rng);
  Eigen::MatrixXd phi0 = Eigen::MatrixXd::Zero(m, m);
  phi0.topRightCorner(k, k) = N;
  return conjugated_model(rng, G0, Signature::neutral(k), phi0);
}

}  // namespace weylspectra
