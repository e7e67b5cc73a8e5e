#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <limits>
#include <numeric>
#include <vector>

#include <weylspectra/errors.hpp>
#include <weylspectra/rank.hpp>

namespace weylspectra {

/// One eigenvalue cluster of an endomorphism: representative value (mean of
/// the clustered eigenvalues), algebraic multiplicity, and the numerical rank
/// of (T - value*I)^k for k = 1..m.
struct EigenvalueCluster {
  std::complex<double> value;
  int multiplicity = 0;
  std::vector<int> rank_chain;
};

/// Conjugation-invariant fingerprint of the Jordan normal form at working
/// tolerance: eigenvalue clusters with per-cluster rank chains, plus the rank
/// chain of T^k itself.  Clusters are sorted by (Re, Im) of the value.
struct JordanInvariants {
  int dim = 0;
  double scale = 0.0;            // largest singular value of T
  double spectral_radius = 0.0;  // max |eigenvalue|
  std::vector<EigenvalueCluster> clusters;
  std::vector<int> overall_rank_chain;
};

/// Worst-case scatter of a computed defective eigenvalue at double precision:
/// a Jordan block of size b smears its eigenvalue over a disc of radius about
/// eps^(1/b).  Clustering thresholds below eps^(1/(m+1)) are noise.
inline double defectivity_floor(int m) {
  return std::pow(std::numeric_limits<double>::epsilon(), 1.0 / (m + 1));
}

namespace detail {

/// Ranks of B, B^2, ..., B^m with a running first-order error bound.
/// base_err is the absolute uncertainty carried by B itself (cluster radius
/// plus roundoff); spurious singular values of B^k grow like
/// base_err * ||B||^(k-1), which the bound e_k tracks.
inline std::vector<int> power_rank_chain(const Eigen::MatrixXcd& B, int m,
                                         double rank_rel_tol, double base_err) {
  constexpr double kappa = 8.0;
  std::vector<int> chain(m, 0);
  Eigen::MatrixXcd M = B;
  double err = base_err;
  double sigma_b = 0.0;
  int prev = m + 1;
  for (int k = 1; k <= m; ++k) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv[0] : 0.0;
    if (k == 1) sigma_b = smax;
    const double cutoff = std::max(rank_rel_tol * smax, kappa * err);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
      if (sv[i] > cutoff) ++r;
    r = std::min(r, prev);  // ranks of powers cannot increase
    chain[k - 1] = r;
    if (r == 0 || r == prev) {
      std::fill(chain.begin() + k, chain.end(), r);
      break;
    }
    prev = r;
    if (k < m) {
      err = err * sigma_b + smax * base_err;
      M = M * B;
    }
  }
  return chain;
}

}  // namespace detail

/// Computes the Jordan fingerprint of T.
///
/// The matrix is normalized by its largest singular value first, so the
/// structure is invariant under non-zero scaling of T.  Eigenvalues are
/// clustered by single linkage with threshold
///   max(eig_tol, defectivity_floor(m)) * (1 + spectral radius),
/// measured on the normalized matrix; rank decisions inside each cluster
/// absorb the measured cluster radius (see power_rank_chain).
inline JordanInvariants jordan_invariants(const Eigen::MatrixXd& T,
                                          double eig_tol = 1e-7,
                                          double rank_rel_tol = 1e-8) {
  if (T.rows() != T.cols()) throw InvalidArgument("jordan_invariants needs a square matrix");
  if (!(eig_tol > 0.0) || !(rank_rel_tol > 0.0))
    throw InvalidArgument("tolerances must be positive");
  const int m = static_cast<int>(T.rows());
  const double eps = std::numeric_limits<double>::epsilon();

  JordanInvariants out;
  out.dim = m;
  {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(T);
    out.scale = svd.singularValues().size() > 0 ? svd.singularValues()[0] : 0.0;
  }
  if (out.scale < 1e-300) {
    // Zero operator: one null cluster, all chains zero.
    out.scale = 0.0;
    EigenvalueCluster c;
    c.value = 0.0;
    c.multiplicity = m;
    c.rank_chain.assign(m, 0);
    out.clusters.push_back(std::move(c));
    out.overall_rank_chain.assign(m, 0);
    return out;
  }

  const Eigen::MatrixXd Tn = T / out.scale;
  Eigen::EigenSolver<Eigen::MatrixXd> es(Tn);
  if (es.info() != Eigen::Success)
    throw EigenSolverError("eigenvalue iteration failed to converge");
  std::vector<std::complex<double>> lam(es.eigenvalues().data(),
                                        es.eigenvalues().data() + m);

  double rho = 0.0;
  for (const auto& l : lam) rho = std::max(rho, std::abs(l));
  out.spectral_radius = rho * out.scale;

  const double threshold = std::max(eig_tol, defectivity_floor(m)) * (1.0 + rho);

  // Single-linkage clustering via union-find on all pairs.
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (std::abs(lam[i] - lam[j]) <= threshold) parent[find(i)] = find(j);

  std::vector<std::vector<int>> groups(m);
  for (int i = 0; i < m; ++i) groups[find(i)].push_back(i);

  for (const auto& g : groups) {
    if (g.empty()) continue;
    std::complex<double> mean = 0.0;
    for (int i : g) mean += lam[i];
    mean /= static_cast<double>(g.size());
    double radius = 0.0;
    for (int i : g) radius = std::max(radius, std::abs(lam[i] - mean));

    EigenvalueCluster c;
    c.value = mean * out.scale;
    c.multiplicity = static_cast<int>(g.size());
    Eigen::MatrixXcd B = Tn.cast<std::complex<double>>();
    B.diagonal().array() -= mean;
    c.rank_chain = detail::power_rank_chain(B, m, rank_rel_tol, radius + m * eps);
    out.clusters.push_back(std::move(c));
  }

  std::sort(out.clusters.begin(), out.clusters.end(),
            [](const EigenvalueCluster& a, const EigenvalueCluster& b) {
              if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
              return a.value.imag() < b.value.imag();
            });

  out.overall_rank_chain = detail::power_rank_chain(
      Tn.cast<std::complex<double>>(), m, rank_rel_tol, m * eps);
  return out;
}

/// Structural equality of two fingerprints: identical dimensions, overall
/// rank chains, cluster count, and a 1-1 matching of clusters with equal
/// multiplicities and rank chains whose values agree within
/// max(tol, defectivity_floor) * (1 + max spectral radius).
inline bool jordan_equal(const JordanInvariants& a, const JordanInvariants& b,
                         double tol = 1e-7) {
  if (a.dim != b.dim) throw InvalidArgument("jordan_equal dimensions differ");
  if (a.overall_rank_chain != b.overall_rank_chain) return false;
  if (a.clusters.size() != b.clusters.size()) return false;
  const double rho = std::max(a.spectral_radius, b.spectral_radius);
  const double threshold = std::max(tol, defectivity_floor(a.dim)) * (1.0 + rho);

  std::vector<bool> used(b.clusters.size(), false);
  for (const auto& ca : a.clusters) {
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.clusters.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(ca.value - b.clusters[j].value);
      if (d < best_d) {
        best_d = d;
        best = static_cast<int>(j);
      }
    }
    if (best < 0 || best_d > threshold) return false;
    const auto& cb = b.clusters[best];
    if (ca.multiplicity != cb.multiplicity || ca.rank_chain != cb.rank_chain)
      return false;
    used[best] = true;
  }
  return true;
}

}  // namespace weylspectra
