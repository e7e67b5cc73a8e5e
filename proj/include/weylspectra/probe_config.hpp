#pragma once

#include <cstdint>

#include <weylspectra/errors.hpp>

namespace weylspectra {

/// Shared knobs for all sampling probes.  Every run is a pure function of
/// this configuration: per-sample RNG streams are derived from (seed, stream,
/// index), so reports are byte-stable across reruns and machines.
struct ProbeConfig {
  int n_points = 10;
  int n_vectors = 100;
  int n_planes = 100;
  std::uint64_t seed = 0x5EED;

  double rank_rel_tol = 1e-8;  // SVD rank cutoff, relative to largest singular value
  double eig_tol = 1e-7;       // eigenvalue clustering tolerance
  double tau_null = 1e-9;      // causal-type null band
  double box = 2.0;            // coordinate box radius for pseudo-sphere draws
  double point_box = 0.0;      // chart point box; 0 = take the family's recommendation
  double zero_tol = 1e-12;     // operators below zero_tol * natural scale count as zero

  int max_attempts_per_sample = 10000;
  int max_witnesses = 8;

  void validate() const {
    if (n_points < 1 || n_vectors < 1 || n_planes < 1)
      throw InvalidArgument("sample counts must be at least 1");
    if (!(rank_rel_tol > 0.0) || !(eig_tol > 0.0) || !(tau_null > 0.0))
      throw InvalidArgument("tolerances must be positive");
    if (zero_tol < 0.0) throw InvalidArgument("zero tolerance must be non-negative");
    if (!(box > 0.0)) throw InvalidArgument("sampling box must be positive");
    if (point_box < 0.0) throw InvalidArgument("point box must be non-negative");
    if (max_attempts_per_sample < 1 || max_witnesses < 1)
      throw InvalidArgument("attempt and witness caps must be at least 1");
  }
};

}  // namespace weylspectra
