#pragma once

#include <optional>
#include <string>
#include <vector>

#include <weylspectra/jordan.hpp>
#include <weylspectra/point_frame.hpp>
#include <weylspectra/sampling.hpp>

namespace weylspectra {

enum class Verdict { Holds, Fails, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// One sampled argument of a probe: a unit vector, or an orthonormal plane
/// basis when v2 is non-empty.
struct ProbeSample {
  Eigen::VectorXd v1;
  Eigen::VectorXd v2;
  bool is_plane() const { return v2.size() > 0; }
};

/// A sample whose fingerprint failed to match the reference, kept so the
/// mismatch can be replayed: jordan_equal(reference, witness.fingerprint)
/// is false at the probe tolerances.
struct ProbeWitness {
  int sample_index = 0;
  ProbeSample sample;
  JordanInvariants fingerprint;
};

struct ProbeVerdict {
  std::string property;  // e.g. "osserman-spacelike"
  Verdict verdict = Verdict::Inconclusive;
  int n_samples = 0;
  int n_hint_samples = 0;  // trailing samples contributed as degeneracy hints
  int n_mismatches = 0;
  int n_errors = 0;
  std::optional<ProbeSample> reference_sample;
  std::optional<JordanInvariants> reference;
  std::vector<ProbeWitness> witnesses;  // capped at cfg.max_witnesses
  SampleStats stats;

  bool holds() const { return verdict == Verdict::Holds; }
};

/// Optional per-probe inputs: extra deterministic samples appended after the
/// random draws (degeneracy hints), and the natural scale of the tensor's
/// provenance so roundoff-level operators clamp to exact zero instead of
/// fingerprinting normalized noise.
struct ProbeExtras {
  std::vector<ProbeSample> samples;
  double scale_hint = 0.0;
};

namespace detail {

template <typename MakeOperator>
ProbeVerdict run_fingerprint_probe(std::string property,
                                   const std::vector<ProbeSample>& samples,
                                   int n_hints, const ProbeConfig& cfg,
                                   double zero_floor, MakeOperator&& op) {
  ProbeVerdict out;
  out.property = std::move(property);
  out.n_samples = static_cast<int>(samples.size());
  out.n_hint_samples = n_hints;
  for (int i = 0; i < out.n_samples; ++i) {
    JordanInvariants fp;
    try {
      Eigen::MatrixXd B = op(samples[i]);
      if (B.cwiseAbs().maxCoeff() <= zero_floor) B.setZero();
      fp = jordan_invariants(B, cfg.eig_tol, cfg.rank_rel_tol);
    } catch (const EigenSolverError&) {
      ++out.n_errors;
      continue;
    }
    if (!out.reference) {
      out.reference = fp;
      out.reference_sample = samples[i];
      continue;
    }
    if (!jordan_equal(*out.reference, fp, cfg.eig_tol)) {
      ++out.n_mismatches;
      if (static_cast<int>(out.witnesses.size()) < cfg.max_witnesses)
        out.witnesses.push_back({i, samples[i], std::move(fp)});
    }
  }
  if (out.n_mismatches > 0)
    out.verdict = Verdict::Fails;
  else if (out.n_errors > 0 || !out.reference)
    out.verdict = Verdict::Inconclusive;
  else
    out.verdict = Verdict::Holds;
  return out;
}

}  // namespace detail

/// Samples the pseudo-sphere of the requested kind and tests whether the
/// Jordan fingerprint of the Jacobi operator J_A(x) is constant over it.
/// Hint samples from `extras` are appended after the random draws, so the
/// reference fingerprint comes from a generic vector.
inline ProbeVerdict osserman_probe(const CurvatureTensor& A, CausalType kind,
                                   const ProbeConfig& cfg,
                                   const ProbeExtras& extras = {}) {
  cfg.validate();
  SampleStats stats;
  const auto vectors = sample_pseudo_sphere(A.space(), kind, cfg, cfg.n_vectors, &stats);
  std::vector<ProbeSample> samples;
  samples.reserve(vectors.size() + extras.samples.size());
  for (const auto& v : vectors) samples.push_back({v, {}});
  for (const auto& s : extras.samples) samples.push_back(s);
  const double zero_floor =
      cfg.zero_tol * std::max({1.0, A.max_abs(), extras.scale_hint});
  auto op = [&A](const ProbeSample& s) { return jacobi_matrix(A, s.v1); };
  ProbeVerdict out = detail::run_fingerprint_probe(
      std::string("osserman-") + to_string(kind), samples,
      static_cast<int>(extras.samples.size()), cfg, zero_floor, op);
  out.stats = stats;
  return out;
}

/// Samples oriented planes of the requested kind and tests whether the
/// Jordan fingerprint of the skew-symmetric curvature operator A(pi) is
/// constant over them.
inline ProbeVerdict ip_probe(const CurvatureTensor& A, CausalType kind,
                             const ProbeConfig& cfg, const ProbeExtras& extras = {}) {
  cfg.validate();
  SampleStats stats;
  const auto planes = sample_planes(A.space(), kind, cfg, cfg.n_planes, &stats);
  std::vector<ProbeSample> samples;
  samples.reserve(planes.size() + extras.samples.size());
  for (const auto& pi : planes) samples.push_back({pi.e1, pi.e2});
  for (const auto& s : extras.samples) samples.push_back(s);
  const double zero_floor =
      cfg.zero_tol * std::max({1.0, A.max_abs(), extras.scale_hint});
  auto op = [&A, kind](const ProbeSample& s) {
    OrientedPlane pi{s.v1, s.v2, kind};
    return skew_curvature_operator(A, pi).matrix;
  };
  ProbeVerdict out = detail::run_fingerprint_probe(
      std::string("ip-") + to_string(kind), samples,
      static_cast<int>(extras.samples.size()), cfg, zero_floor, op);
  out.stats = stats;
  return out;
}

/// Normalized hint vectors of the requested kind at one point, built from the
/// family's raw degeneracy candidates.
inline std::vector<Eigen::VectorXd> hint_vectors(const MetricField& g,
                                                 const Eigen::VectorXd& point,
                                                 const InnerProduct& space,
                                                 CausalType kind,
                                                 const ProbeConfig& cfg) {
  std::vector<Eigen::VectorXd> out;
  if (!g.hints()) return out;
  const double want = kind == CausalType::Timelike ? -1.0 : 1.0;
  for (const auto& raw : g.hints()(point, space)) {
    const double n2 = raw.squaredNorm();
    if (n2 < 1e-12) continue;
    const double s = space.inner(raw, raw);
    if (std::abs(s) < cfg.tau_null * n2 || want * s <= 0.0) continue;
    out.push_back(raw / std::sqrt(std::abs(s)));
  }
  return out;
}

/// Oriented hint planes: orthonormalized pairs of hint vectors that keep the
/// requested kind.
inline std::vector<OrientedPlane> hint_planes(const std::vector<Eigen::VectorXd>& hv,
                                              const InnerProduct& space,
                                              CausalType kind) {
  std::vector<OrientedPlane> out;
  for (std::size_t i = 0; i < hv.size(); ++i)
    for (std::size_t j = i + 1; j < hv.size(); ++j) {
      try {
        out.push_back(make_plane(space, hv[i], hv[j], kind));
      } catch (const InvalidArgument&) {
        // pair was collinear or the complement flipped type; skip it
      }
    }
  return out;
}

/// Pointwise verdict of a conformal probe at one chart point.
struct PointVerdict {
  Eigen::VectorXd point;
  ProbeVerdict verdict;
};

/// Verdict over sampled chart points: holds iff the per-point probe holds at
/// every sampled point (the pointwise property of the Weyl tensor).
struct ConformalProbeVerdict {
  std::string property;
  std::string family;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<PointVerdict> points;
  SampleStats point_stats;

  bool holds() const { return verdict == Verdict::Holds; }
};

namespace detail {

template <typename PointProbe>
ConformalProbeVerdict run_conformal_probe(std::string property, const MetricField& g,
                                          const ProbeConfig& cfg, PointProbe&& probe) {
  ConformalProbeVerdict out;
  out.property = std::move(property);
  out.family = g.name();
  const auto points = sample_chart_points(g, cfg, cfg.n_points, &out.point_stats);
  bool any_inconclusive = false;
  bool any_fail = false;
  for (const auto& P : points) {
    PointFrame frame = frame_at(g, P);
    ProbeVerdict v = probe(frame);
    any_fail = any_fail || v.verdict == Verdict::Fails;
    any_inconclusive = any_inconclusive || v.verdict == Verdict::Inconclusive;
    out.points.push_back({P, std::move(v)});
  }
  out.verdict = any_fail ? Verdict::Fails
                         : (any_inconclusive ? Verdict::Inconclusive : Verdict::Holds);
  return out;
}

}  // namespace detail

/// Conformal Jordan-Osserman probe: at each sampled chart point, probes the
/// Jacobi fingerprints of the Weyl tensor over the unit pseudo-sphere.
/// Family degeneracy hints join the sample set, since fingerprint drops can
/// be confined to measure-zero cones that random draws never touch.
inline ConformalProbeVerdict conformal_osserman_probe(const MetricField& g,
                                                      CausalType kind,
                                                      const ProbeConfig& cfg) {
  cfg.validate();
  return detail::run_conformal_probe(
      std::string("conformal-osserman-") + to_string(kind), g, cfg,
      [&](const PointFrame& f) {
        ProbeExtras extras;
        extras.scale_hint = f.riemann.max_abs();
        for (auto& v : hint_vectors(g, f.point, f.space, kind, cfg))
          extras.samples.push_back({std::move(v), {}});
        return osserman_probe(f.weyl, kind, cfg, extras);
      });
}

/// Conformal Jordan-Ivanov-Petrova probe: same over oriented planes with the
/// skew-symmetric curvature operator of the Weyl tensor.
inline ConformalProbeVerdict conformal_ip_probe(const MetricField& g, CausalType kind,
                                                const ProbeConfig& cfg) {
  cfg.validate();
  return detail::run_conformal_probe(
      std::string("conformal-ip-") + to_string(kind), g, cfg,
      [&](const PointFrame& f) {
        ProbeExtras extras;
        extras.scale_hint = f.riemann.max_abs();
        const auto hv = hint_vectors(g, f.point, f.space, kind, cfg);
        for (auto& pi : hint_planes(hv, f.space, kind))
          extras.samples.push_back({std::move(pi.e1), std::move(pi.e2)});
        return ip_probe(f.weyl, kind, cfg, extras);
      });
}

}  // namespace weylspectra
