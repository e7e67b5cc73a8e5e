#pragma once

#include <nlohmann/json.hpp>

#include <weylspectra/jordan.hpp>
#include <weylspectra/probe_config.hpp>
#include <weylspectra/probes.hpp>

namespace weylspectra {

/// JSON views of the report types.  Field order is fixed (ordered_json) and
/// nothing time- or machine-dependent is emitted, so identical configurations
/// serialize byte-identically.

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const JordanInvariants& f) {
  ordered_json out;
  out["dim"] = f.dim;
  out["scale"] = f.scale;
  out["spectral_radius"] = f.spectral_radius;
  ordered_json clusters = ordered_json::array();
  for (const auto& c : f.clusters) {
    ordered_json jc;
    jc["re"] = c.value.real();
    jc["im"] = c.value.imag();
    jc["multiplicity"] = c.multiplicity;
    jc["rank_chain"] = c.rank_chain;
    clusters.push_back(std::move(jc));
  }
  out["clusters"] = std::move(clusters);
  out["overall_rank_chain"] = f.overall_rank_chain;
  return out;
}

inline ordered_json to_json(const Eigen::VectorXd& v) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

inline ordered_json to_json(const ProbeSample& s) {
  ordered_json out;
  if (s.is_plane()) {
    out["e1"] = to_json(s.v1);
    out["e2"] = to_json(s.v2);
  } else {
    out["v"] = to_json(s.v1);
  }
  return out;
}

inline ordered_json to_json(const ProbeConfig& cfg) {
  ordered_json out;
  out["n_points"] = cfg.n_points;
  out["n_vectors"] = cfg.n_vectors;
  out["n_planes"] = cfg.n_planes;
  out["seed"] = cfg.seed;
  out["rank_rel_tol"] = cfg.rank_rel_tol;
  out["eig_tol"] = cfg.eig_tol;
  out["tau_null"] = cfg.tau_null;
  out["box"] = cfg.box;
  out["point_box"] = cfg.point_box;
  out["zero_tol"] = cfg.zero_tol;
  return out;
}

inline ordered_json to_json(const ProbeVerdict& v) {
  ordered_json out;
  out["property"] = v.property;
  out["verdict"] = to_string(v.verdict);
  out["n_samples"] = v.n_samples;
  out["n_hint_samples"] = v.n_hint_samples;
  out["n_mismatches"] = v.n_mismatches;
  out["n_errors"] = v.n_errors;
  out["acceptance_fraction"] = v.stats.acceptance_fraction();
  if (v.reference_sample) out["reference_sample"] = to_json(*v.reference_sample);
  if (v.reference) out["reference_fingerprint"] = to_json(*v.reference);
  ordered_json ws = ordered_json::array();
  const int first_hint = v.n_samples - v.n_hint_samples;
  for (const auto& w : v.witnesses) {
    ordered_json jw;
    jw["sample_index"] = w.sample_index;
    jw["from_hint"] = w.sample_index >= first_hint;
    jw["sample"] = to_json(w.sample);
    jw["fingerprint"] = to_json(w.fingerprint);
    ws.push_back(std::move(jw));
  }
  out["witnesses"] = std::move(ws);
  return out;
}

inline ordered_json to_json(const ConformalProbeVerdict& v) {
  ordered_json out;
  out["property"] = v.property;
  out["family"] = v.family;
  out["verdict"] = to_string(v.verdict);
  ordered_json pts = ordered_json::array();
  for (const auto& p : v.points) {
    ordered_json jp;
    jp["point"] = to_json(p.point);
    jp["probe"] = to_json(p.verdict);
    pts.push_back(std::move(jp));
  }
  out["points"] = std::move(pts);
  return out;
}

/// CSV export of a probe run, one row per sample: the reference row first,
/// then each witness.  Plane samples join their basis with '|'.
inline std::string to_csv(const ProbeVerdict& v) {
  std::string out =
      "role,sample_index,argument,clusters,cluster_rank_chains,overall_rank_chain\n";
  auto vec_str = [](const Eigen::VectorXd& x) {
    std::string s;
    for (int i = 0; i < x.size(); ++i) {
      if (i) s += ';';
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", x[i]);
      s += buf;
    }
    return s;
  };
  auto sample_str = [&](const ProbeSample& s) {
    return s.is_plane() ? vec_str(s.v1) + "|" + vec_str(s.v2) : vec_str(s.v1);
  };
  auto chain_str = [](const std::vector<int>& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += '>';
      s += std::to_string(c[i]);
    }
    return s;
  };
  auto fp_row = [&](const std::string& role, int index, const ProbeSample& s,
                    const JordanInvariants& f) {
    std::string clusters, chains;
    for (std::size_t i = 0; i < f.clusters.size(); ++i) {
      const auto& c = f.clusters[i];
      if (i) {
        clusters += ';';
        chains += ';';
      }
      char buf[80];
      std::snprintf(buf, sizeof buf, "%.12g%+.12gi(x%d)", c.value.real(),
                    c.value.imag(), c.multiplicity);
      clusters += buf;
      chains += chain_str(c.rank_chain);
    }
    return role + "," + std::to_string(index) + "," + sample_str(s) + "," + clusters +
           "," + chains + "," + chain_str(f.overall_rank_chain) + "\n";
  };
  if (v.reference && v.reference_sample)
    out += fp_row("reference", 0, *v.reference_sample, *v.reference);
  const int first_hint = v.n_samples - v.n_hint_samples;
  for (const auto& w : v.witnesses)
    out += fp_row(w.sample_index >= first_hint ? "hint-witness" : "witness",
                  w.sample_index, w.sample, w.fingerprint);
  return out;
}

inline std::string to_csv(const ConformalProbeVerdict& v) {
  std::string out = "point,role,sample_index,argument,clusters,cluster_rank_chains,"
                    "overall_rank_chain\n";
  for (const auto& p : v.points) {
    std::string pt;
    for (int i = 0; i < p.point.size(); ++i) {
      if (i) pt += ';';
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", p.point[i]);
      pt += buf;
    }
    const std::string body = to_csv(p.verdict);
    // Prefix every data row of the per-point CSV with the point column.
    std::size_t pos = body.find('\n') + 1;
    while (pos < body.size()) {
      const std::size_t next = body.find('\n', pos);
      out += pt + "," + body.substr(pos, next - pos) + "\n";
      pos = next + 1;
    }
  }
  return out;
}

}  // namespace weylspectra
