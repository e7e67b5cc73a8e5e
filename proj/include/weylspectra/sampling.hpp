#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <weylspectra/metric_field.hpp>
#include <weylspectra/operators.hpp>
#include <weylspectra/probe_config.hpp>

namespace weylspectra {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Independent deterministic RNG stream for one sample: mixing (seed, stream,
/// index) keeps every sample's draws stable no matter how many attempts other
/// samples consumed.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t index) {
  const std::uint64_t s = splitmix64(splitmix64(seed ^ (0xa076'1d64'78bd'642full * stream)) ^
                                     splitmix64(index + 0x5851'f42d'4c95'7f2dull));
  return std::mt19937_64(s);
}

namespace stream_id {
constexpr std::uint64_t vectors = 1;
constexpr std::uint64_t planes = 2;
constexpr std::uint64_t points = 3;
constexpr std::uint64_t generators = 4;
}  // namespace stream_id

struct SampleStats {
  long attempts = 0;
  long accepted = 0;
  double acceptance_fraction() const {
    return attempts > 0 ? static_cast<double>(accepted) / static_cast<double>(attempts) : 0.0;
  }
};

namespace detail {

inline Eigen::VectorXd draw_box(std::mt19937_64& rng, int m, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  Eigen::VectorXd v(m);
  for (int i = 0; i < m; ++i) v[i] = u(rng);
  return v;
}

/// One unit vector of the requested kind from this sample's own stream, by
/// rejection in the box followed by normalization |g(v,v)|^{-1/2}.
inline Eigen::VectorXd draw_unit_vector(const InnerProduct& g, CausalType kind,
                                        const ProbeConfig& cfg, std::mt19937_64& rng,
                                        SampleStats* stats) {
  const double want = kind == CausalType::Timelike ? -1.0 : 1.0;
  for (int attempt = 0; attempt < cfg.max_attempts_per_sample; ++attempt) {
    if (stats) ++stats->attempts;
    Eigen::VectorXd v = draw_box(rng, g.dim(), cfg.box);
    const double n2 = v.squaredNorm();
    if (n2 < 1e-12) continue;
    const double s = g.inner(v, v);
    if (std::abs(s) < cfg.tau_null * n2) continue;  // too close to the null cone
    if (want * s <= 0.0) continue;
    if (stats) ++stats->accepted;
    return v / std::sqrt(std::abs(s));
  }
  throw InvalidArgument("pseudo-sphere sampling exhausted its attempt budget (" +
                        std::string(to_string(kind)) + ", signature (" +
                        std::to_string(g.signature().p) + "," +
                        std::to_string(g.signature().q) + "))");
}

}  // namespace detail

/// n unit vectors with g(v,v) = +1 (spacelike) or -1 (timelike).
inline std::vector<Eigen::VectorXd> sample_pseudo_sphere(const InnerProduct& g,
                                                         CausalType kind,
                                                         const ProbeConfig& cfg, int n,
                                                         SampleStats* stats = nullptr) {
  if (kind == CausalType::Null) throw InvalidArgument("sampling kind must be spacelike or timelike");
  if (kind == CausalType::Spacelike && g.signature().q < 1)
    throw InvalidArgument("space has no spacelike directions");
  if (kind == CausalType::Timelike && g.signature().p < 1)
    throw InvalidArgument("space has no timelike directions");
  std::vector<Eigen::VectorXd> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    auto rng = sample_rng(cfg.seed, stream_id::vectors, static_cast<std::uint64_t>(i));
    out.push_back(detail::draw_unit_vector(g, kind, cfg, rng, stats));
  }
  return out;
}

/// n oriented g-orthonormal planes of the requested kind: draw two unit
/// vectors of the kind and orthogonalize the second against the first,
/// redrawing whenever the Gram-Schmidt step degenerates or flips type.
inline std::vector<OrientedPlane> sample_planes(const InnerProduct& g, CausalType kind,
                                                const ProbeConfig& cfg, int n,
                                                SampleStats* stats = nullptr) {
  if (kind == CausalType::Null) throw InvalidArgument("sampling kind must be spacelike or timelike");
  const int have = kind == CausalType::Spacelike ? g.signature().q : g.signature().p;
  if (have < 2)
    throw InvalidArgument("signature admits no " + std::string(to_string(kind)) + " planes");
  const double want = kind == CausalType::Timelike ? -1.0 : 1.0;

  std::vector<OrientedPlane> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    auto rng = sample_rng(cfg.seed, stream_id::planes, static_cast<std::uint64_t>(i));
    bool done = false;
    for (int attempt = 0; attempt < cfg.max_attempts_per_sample && !done; ++attempt) {
      Eigen::VectorXd e1 = detail::draw_unit_vector(g, kind, cfg, rng, stats);
      Eigen::VectorXd u = detail::draw_unit_vector(g, kind, cfg, rng, stats);
      Eigen::VectorXd w = u - (g.inner(u, e1) / g.inner(e1, e1)) * e1;
      const double n2 = w.squaredNorm();
      if (n2 < 1e-12) continue;
      const double s = g.inner(w, w);
      if (std::abs(s) < cfg.tau_null * n2 || want * s <= 0.0) continue;
      OrientedPlane pi;
      pi.e1 = std::move(e1);
      pi.e2 = w / std::sqrt(std::abs(s));
      pi.kind = kind;
      out.push_back(std::move(pi));
      done = true;
    }
    if (!done)
      throw InvalidArgument("plane sampling exhausted its attempt budget");
  }
  return out;
}

/// n chart points uniform in the point box, rejecting points where the
/// metric Gram is numerically degenerate.
inline std::vector<Eigen::VectorXd> sample_chart_points(const MetricField& g,
                                                        const ProbeConfig& cfg, int n,
                                                        SampleStats* stats = nullptr) {
  const double radius = cfg.point_box > 0.0 ? cfg.point_box : g.point_box();
  std::vector<Eigen::VectorXd> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    auto rng = sample_rng(cfg.seed, stream_id::points, static_cast<std::uint64_t>(i));
    bool done = false;
    for (int attempt = 0; attempt < cfg.max_attempts_per_sample && !done; ++attempt) {
      if (stats) ++stats->attempts;
      Eigen::VectorXd P = detail::draw_box(rng, g.dim(), radius);
      Eigen::MatrixXd G = g.gram_at(P);
      if (std::abs(G.determinant()) < 1e-8) continue;
      if (stats) ++stats->accepted;
      out.push_back(std::move(P));
      done = true;
    }
    if (!done) throw InvalidArgument("chart point sampling exhausted its attempt budget");
  }
  return out;
}

}  // namespace weylspectra
