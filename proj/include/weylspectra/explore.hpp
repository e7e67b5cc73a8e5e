#pragma once

#include <string>
#include <vector>

#include <weylspectra/contractions.hpp>
#include <weylspectra/probes.hpp>
#include <weylspectra/random_gen.hpp>
#include <weylspectra/report_json.hpp>

namespace weylspectra {

/// One randomized trial of the conjecture search: build A = lambda A_phi from
/// a structured generator, project to Weyl, run the pointwise probes, and
/// record the skew-operator nilpotency fingerprint.
struct ConjectureTrial {
  int index = 0;
  Signature signature{0, 3};
  std::string generator;
  double lambda = 0.0;
  bool weyl_zero = false;
  bool skew_nilpotent = false;
  // Inconclusive marks a kind the signature does not admit.
  Verdict ip_spacelike = Verdict::Inconclusive;
  Verdict ip_timelike = Verdict::Inconclusive;
  Verdict osserman_spacelike = Verdict::Inconclusive;
  Verdict osserman_timelike = Verdict::Inconclusive;
  bool candidate = false;
};

struct ExploreReport {
  ProbeConfig config;
  int n_trials = 0;
  std::vector<ConjectureTrial> trials;
  std::vector<int> candidate_indices;
  // For definite signatures the pointwise Osserman and Ivanov-Petrova
  // verdicts are expected to agree; count how often they do.
  int definite_trials = 0;
  int definite_agreements = 0;
};

namespace detail {

/// Nilpotent up to the same threshold the clustering uses: the whole spectrum
/// merges with zero.
inline bool fingerprint_nilpotent(const JordanInvariants& fp, double eig_tol) {
  if (fp.scale <= 0.0) return true;
  const double rho = fp.spectral_radius / fp.scale;
  return rho <= std::max(eig_tol, defectivity_floor(fp.dim)) * (1.0 + rho);
}

}  // namespace detail

/// Search for counterexamples to: "a Weyl tensor built from a structured
/// generator that is Jordan Ivanov-Petrova has nilpotent skew operators (or
/// vanishes)".  A trial becomes a candidate when some admissible plane kind
/// holds, the reference skew operator is not nilpotent, and the Weyl part is
/// nonzero.  An empty candidate list supports the conjecture.
inline ExploreReport explore_conjectures(const ProbeConfig& cfg, int n_trials) {
  cfg.validate();
  if (n_trials < 1) throw InvalidArgument("explore requires at least one trial");

  const Signature any_pool[] = {Signature(0, 4), Signature(0, 5), Signature(0, 6),
                                Signature(1, 3), Signature(1, 4), Signature(2, 2),
                                Signature(2, 4), Signature(3, 3)};
  const Signature neutral_pool[] = {Signature(2, 2), Signature(3, 3)};

  ExploreReport rep;
  rep.config = cfg;
  rep.n_trials = n_trials;
  rep.trials.reserve(n_trials);

  for (int t = 0; t < n_trials; ++t) {
    auto rng = sample_rng(cfg.seed, stream_id::generators, static_cast<std::uint64_t>(t));
    std::uniform_real_distribution<double> mag(0.5, 1.5);
    std::uniform_int_distribution<int> coin(0, 1);

    ConjectureTrial trial;
    trial.index = t;
    trial.lambda = (coin(rng) ? 1.0 : -1.0) * mag(rng);

    GeneratorModel model{InnerProduct::euclidean(3), Eigen::MatrixXd::Zero(3, 3)};
    switch (t % 3) {
      case 0: {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(std::size(any_pool)) - 1);
        trial.signature = any_pool[pick(rng)];
        trial.generator = "isometry";
        std::uniform_int_distribution<int> split(0, trial.signature.dim());
        model = random_isometry_model(rng, trial.signature, split(rng));
        break;
      }
      case 1: {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(std::size(neutral_pool)) - 1);
        trial.signature = neutral_pool[pick(rng)];
        trial.generator = "para-isometry";
        model = random_para_isometry_model(rng, trial.signature.p);
        break;
      }
      default: {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(std::size(neutral_pool)) - 1);
        trial.signature = neutral_pool[pick(rng)];
        trial.generator = "nilpotent";
        model = random_nilpotent_model(rng, trial.signature.p);
        break;
      }
    }

    const CurvatureTensor A = trial.lambda * a_phi_tensor(model.space, model.phi);
    const CurvatureTensor W = weyl_projection(A);
    trial.weyl_zero = W.max_abs() <= 1e-12 * std::max(1.0, A.max_abs());

    ProbeConfig tcfg = cfg;
    tcfg.seed = splitmix64(cfg.seed ^ (0x7ea5ull + static_cast<std::uint64_t>(t)));

    const Signature sig = model.space.signature();
    bool ip_holds_somewhere = false;
    const JordanInvariants* skew_reference = nullptr;
    ProbeVerdict ip_s, ip_t_;
    if (sig.q >= 2) {
      ip_s = ip_probe(W, CausalType::Spacelike, tcfg);
      trial.ip_spacelike = ip_s.verdict;
      ip_holds_somewhere = ip_holds_somewhere || ip_s.holds();
      if (ip_s.reference) skew_reference = &*ip_s.reference;
    }
    if (sig.p >= 2) {
      ip_t_ = ip_probe(W, CausalType::Timelike, tcfg);
      trial.ip_timelike = ip_t_.verdict;
      ip_holds_somewhere = ip_holds_somewhere || ip_t_.holds();
      if (!skew_reference && ip_t_.reference) skew_reference = &*ip_t_.reference;
    }
    if (sig.q >= 1) trial.osserman_spacelike = osserman_probe(W, CausalType::Spacelike, tcfg).verdict;
    if (sig.p >= 1) trial.osserman_timelike = osserman_probe(W, CausalType::Timelike, tcfg).verdict;

    trial.skew_nilpotent =
        !skew_reference || detail::fingerprint_nilpotent(*skew_reference, cfg.eig_tol);
    trial.candidate = ip_holds_somewhere && !trial.skew_nilpotent && !trial.weyl_zero;
    if (trial.candidate) rep.candidate_indices.push_back(t);

    if (sig.p == 0) {
      ++rep.definite_trials;
      if ((trial.ip_spacelike == Verdict::Holds) ==
          (trial.osserman_spacelike == Verdict::Holds))
        ++rep.definite_agreements;
    }
    rep.trials.push_back(std::move(trial));
  }
  return rep;
}

inline ordered_json to_json(const ConjectureTrial& t) {
  ordered_json out;
  out["trial"] = t.index;
  out["signature"] = {t.signature.p, t.signature.q};
  out["generator"] = t.generator;
  out["lambda"] = t.lambda;
  out["weyl_zero"] = t.weyl_zero;
  out["skew_nilpotent"] = t.skew_nilpotent;
  out["ip_spacelike"] = to_string(t.ip_spacelike);
  out["ip_timelike"] = to_string(t.ip_timelike);
  out["osserman_spacelike"] = to_string(t.osserman_spacelike);
  out["osserman_timelike"] = to_string(t.osserman_timelike);
  out["candidate"] = t.candidate;
  return out;
}

inline ordered_json to_json(const ExploreReport& rep) {
  ordered_json out;
  out["suite"] = "conjecture-exploration";
  out["conjecture"] =
      "an Ivanov-Petrova Weyl tensor built from a structured generator is "
      "nilpotent or vanishes";
  out["config"] = to_json(rep.config);
  out["n_trials"] = rep.n_trials;
  ordered_json trials = ordered_json::array();
  for (const auto& t : rep.trials) trials.push_back(to_json(t));
  out["trials"] = std::move(trials);
  out["candidates"] = rep.candidate_indices;
  out["definite_trials"] = rep.definite_trials;
  out["definite_agreements"] = rep.definite_agreements;
  return out;
}

}  // namespace weylspectra
