// Command-line front end: validate tensor files, inspect contractions,
// evaluate metric families at chart points, run the sampling probes, the
// theorem-verification suite, and the conjecture explorer.
//
// Exit codes
//   validate: 0 symmetries hold, 1 violations, 2 unreadable/malformed input
//   probe:    0 holds, 1 fails, 3 inconclusive, 2 usage error
//   verify:   0 all jobs pass, 1 otherwise
//   explore:  0 (findings are a log, not a verdict)
//   others:   0 success, 2 usage/input error

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <weylspectra/core.hpp>

namespace ws = weylspectra;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("WEYL_SPECTRA_SEED")) {
    try {
      return std::stoull(env, nullptr, 0);
    } catch (const std::exception&) {
      throw ws::InvalidArgument("WEYL_SPECTRA_SEED is not an unsigned integer");
    }
  }
  return 0x5EED;
}

void add_probe_flags(CLI::App* sub, ws::ProbeConfig& cfg) {
  sub->add_option("--points", cfg.n_points, "chart points per manifold probe");
  sub->add_option("--vectors", cfg.n_vectors, "pseudo-sphere samples per probe");
  sub->add_option("--planes", cfg.n_planes, "plane samples per probe");
  sub->add_option("--seed", cfg.seed, "RNG seed (env WEYL_SPECTRA_SEED supplies the default)");
  sub->add_option("--rank-tol", cfg.rank_rel_tol, "relative SVD rank cutoff");
  sub->add_option("--eig-tol", cfg.eig_tol, "eigenvalue clustering tolerance");
  sub->add_option("--box", cfg.box, "coordinate box radius for sphere draws");
}

void write_report(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw ws::InvalidArgument("cannot open output file: " + out_path);
  f << text;
  if (!f) throw ws::InvalidArgument("failed writing output file: " + out_path);
}

Eigen::VectorXd parse_point(const std::string& s, int dim) {
  std::vector<double> vals;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string item =
        s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      vals.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ws::InvalidArgument("bad coordinate in --point: '" + item + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(vals.size()) != dim)
    throw ws::InvalidArgument("--point has " + std::to_string(vals.size()) +
                              " coordinates, metric needs " + std::to_string(dim));
  return Eigen::Map<Eigen::VectorXd>(vals.data(), dim);
}

ws::CausalType parse_kind(const std::string& kind) {
  if (kind == "spacelike") return ws::CausalType::Spacelike;
  if (kind == "timelike") return ws::CausalType::Timelike;
  throw ws::InvalidArgument("--kind must be spacelike or timelike");
}

int cmd_validate(const std::string& file) {
  const ws::CurvatureTensor A = ws::load_tensor(file, /*enforce_symmetries=*/false);
  const ws::SymmetryReport rep = ws::validate(A);
  ws::ordered_json out;
  out["file"] = file;
  out["dim"] = A.space().dim();
  out["signature"] = {A.space().signature().p, A.space().signature().q};
  out["pair_symmetry"] = rep.pair_symmetry;
  out["antisymmetry"] = rep.antisymmetry;
  out["first_bianchi"] = rep.first_bianchi;
  const bool ok = rep.passes();
  out["passes"] = ok;
  write_report(out.dump(2) + "\n", "");
  return ok ? 0 : 1;
}

int cmd_tensor(const std::string& file, const std::string& project_weyl,
               const std::string& out_path) {
  // Loose load: the report itself carries the symmetry violations.
  const ws::CurvatureTensor A = ws::load_tensor(file, /*enforce_symmetries=*/false);
  const auto& g = A.space();
  const Eigen::MatrixXd rho = ws::ricci(A);
  const double tau = ws::scalar_curvature(A);
  const ws::CurvatureTensor W = ws::weyl_projection(A);
  const ws::SymmetryReport rep = ws::validate(A);

  ws::ordered_json out;
  out["file"] = file;
  out["dim"] = g.dim();
  out["signature"] = {g.signature().p, g.signature().q};
  out["symmetry"] = {{"pair_symmetry", rep.pair_symmetry},
                     {"antisymmetry", rep.antisymmetry},
                     {"first_bianchi", rep.first_bianchi}};
  ws::ordered_json ricci_rows = ws::ordered_json::array();
  for (int i = 0; i < g.dim(); ++i) {
    ws::ordered_json row = ws::ordered_json::array();
    for (int j = 0; j < g.dim(); ++j) row.push_back(rho(i, j));
    ricci_rows.push_back(std::move(row));
  }
  out["ricci"] = std::move(ricci_rows);
  out["scalar_curvature"] = tau;
  out["einstein_residual"] =
      (rho - (tau / g.dim()) * g.gram()).cwiseAbs().maxCoeff();
  out["weyl_max_abs"] = W.max_abs();
  if (!project_weyl.empty()) {
    ws::save_tensor(project_weyl, W);
    out["weyl_written_to"] = project_weyl;
  }
  write_report(out.dump(2) + "\n", out_path);
  return 0;
}

int cmd_manifold(const std::string& family, const std::string& point_csv,
                 const std::string& dump, const std::string& out_path,
                 ws::ProbeConfig cfg) {
  const ws::MetricField g = ws::parse_family(family);
  std::vector<Eigen::VectorXd> points;
  if (!point_csv.empty())
    points.push_back(parse_point(point_csv, g.dim()));
  else
    points = ws::sample_chart_points(g, cfg, cfg.n_points);

  if (dump == "weyl" || dump == "riemann") {
    if (points.size() != 1)
      throw ws::InvalidArgument(
          "tensor dumps need exactly one point: pass --point or --points 1");
    const ws::PointFrame fr = ws::frame_at(g, points.front());
    const ws::CurvatureTensor& T = dump == "weyl" ? fr.weyl : fr.riemann;
    write_report(ws::tensor_to_json(T).dump(2) + "\n", out_path);
    return 0;
  }
  if (dump != "frame")
    throw ws::InvalidArgument("--dump must be frame, weyl, or riemann");

  ws::ordered_json out;
  out["family"] = g.name();
  out["dim"] = g.dim();
  out["signature"] = {g.signature().p, g.signature().q};
  ws::ordered_json frames = ws::ordered_json::array();
  for (const auto& P : points) {
    const ws::PointFrame fr = ws::frame_at(g, P);
    ws::ordered_json jf;
    jf["point"] = ws::to_json(P);
    ws::ordered_json gram = ws::ordered_json::array();
    for (int i = 0; i < g.dim(); ++i) {
      ws::ordered_json row = ws::ordered_json::array();
      for (int j = 0; j < g.dim(); ++j) row.push_back(fr.space.gram()(i, j));
      gram.push_back(std::move(row));
    }
    jf["gram"] = std::move(gram);
    ws::ordered_json chr = ws::ordered_json::array();
    for (int k = 0; k < g.dim(); ++k)
      for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
          if (std::abs(fr.christoffel(k, i, j)) > 0.0)
            chr.push_back({k, i, j, fr.christoffel(k, i, j)});
    jf["christoffel_second_kind"] = std::move(chr);
    jf["riemann"] = ws::tensor_to_json(fr.riemann);
    jf["weyl"] = ws::tensor_to_json(fr.weyl);
    jf["ricci_max_abs"] = ws::ricci(fr.riemann).cwiseAbs().maxCoeff();
    jf["scalar_curvature"] = ws::scalar_curvature(fr.riemann);
    frames.push_back(std::move(jf));
  }
  out["frames"] = std::move(frames);
  write_report(out.dump(2) + "\n", out_path);
  return 0;
}

int verdict_exit(ws::Verdict v) {
  switch (v) {
    case ws::Verdict::Holds: return 0;
    case ws::Verdict::Fails: return 1;
    case ws::Verdict::Inconclusive: return 3;
  }
  return 2;
}

int cmd_probe(const std::string& family, const std::string& tensor_file,
              const std::string& property, const std::string& kind_name,
              const std::string& format, const std::string& out_path,
              const ws::ProbeConfig& cfg) {
  if (family.empty() == tensor_file.empty())
    throw ws::InvalidArgument("probe needs exactly one of --family or --tensor");
  if (property != "osserman" && property != "ip")
    throw ws::InvalidArgument("--property must be osserman or ip");
  if (format != "json" && format != "csv")
    throw ws::InvalidArgument("--format must be json or csv");
  const ws::CausalType kind = parse_kind(kind_name);

  if (!family.empty()) {
    const ws::MetricField g = ws::parse_family(family);
    const ws::ConformalProbeVerdict v = property == "osserman"
                                            ? ws::conformal_osserman_probe(g, kind, cfg)
                                            : ws::conformal_ip_probe(g, kind, cfg);
    write_report(format == "json" ? ws::to_json(v).dump(2) + "\n" : ws::to_csv(v),
                 out_path);
    return verdict_exit(v.verdict);
  }
  const ws::CurvatureTensor A = ws::load_tensor(tensor_file);
  const ws::ProbeVerdict v = property == "osserman" ? ws::osserman_probe(A, kind, cfg)
                                                    : ws::ip_probe(A, kind, cfg);
  write_report(format == "json" ? ws::to_json(v).dump(2) + "\n" : ws::to_csv(v),
               out_path);
  return verdict_exit(v.verdict);
}

int cmd_verify(const std::string& only, const std::string& out_path,
               const ws::ProbeConfig& cfg) {
  const ws::VerifyReport rep = ws::verify_theorems(cfg, only);
  write_report(ws::to_json(rep).dump(2) + "\n", out_path);
  for (const auto& j : rep.jobs)
    std::cerr << j.id << " " << (j.passed ? "pass" : "FAIL") << "\n";
  return rep.all_passed ? 0 : 1;
}

int cmd_explore(int trials, const std::string& out_path, const ws::ProbeConfig& cfg) {
  const ws::ExploreReport rep = ws::explore_conjectures(cfg, trials);
  write_report(ws::to_json(rep).dump(2) + "\n", out_path);
  std::cerr << "trials=" << rep.n_trials << " candidates=" << rep.candidate_indices.size()
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebraic curvature tensors, Weyl spectra, and sampling probes"};
  app.require_subcommand(1);

  ws::ProbeConfig cfg;
  try {
    cfg.seed = default_seed();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  // validate FILE
  auto* validate = app.add_subcommand("validate", "check curvature symmetries of a tensor file");
  std::string validate_file;
  validate->add_option("file", validate_file, "tensor JSON file")->required();

  // tensor --tensor FILE [--project-weyl OUT] [--out PATH]
  auto* tensor = app.add_subcommand("tensor", "contractions and Weyl projection of a tensor file");
  std::string tensor_file, tensor_weyl_out, tensor_out;
  tensor->add_option("--tensor", tensor_file, "tensor JSON file")->required();
  tensor->add_option("--project-weyl", tensor_weyl_out, "write the Weyl projection to this file");
  tensor->add_option("--out", tensor_out, "report path (default stdout)");

  // manifold --family NAME [--point CSV] [--dump frame|weyl|riemann] [--out PATH]
  auto* manifold = app.add_subcommand("manifold", "evaluate a metric family at chart points");
  std::string man_family, man_point, man_dump = "frame", man_out;
  manifold->add_option("--family", man_family, "family spec, e.g. gf:p=3,f=sum_sq")->required();
  manifold->add_option("--point", man_point, "comma-separated chart coordinates");
  manifold->add_option("--dump", man_dump, "frame (default), weyl, or riemann");
  manifold->add_option("--out", man_out, "output path (default stdout)");
  add_probe_flags(manifold, cfg);

  // probe (--family NAME | --tensor FILE) --property P --kind K [--format F] [--out PATH]
  auto* probe = app.add_subcommand("probe", "sample a spectral constancy property");
  std::string pr_family, pr_tensor, pr_property, pr_kind, pr_format = "json", pr_out;
  probe->add_option("--family", pr_family, "family spec (conformal probe of its Weyl tensor)");
  probe->add_option("--tensor", pr_tensor, "tensor JSON file (algebraic probe)");
  probe->add_option("--property", pr_property, "osserman or ip")->required();
  probe->add_option("--kind", pr_kind, "spacelike or timelike")->required();
  probe->add_option("--format", pr_format, "json (default) or csv");
  probe->add_option("--out", pr_out, "output path (default stdout)");
  add_probe_flags(probe, cfg);

  // verify [--only JOB] [--out PATH]
  auto* verify = app.add_subcommand("verify", "run the theorem-verification suite");
  std::string vf_only, vf_out;
  verify->add_option("--only", vf_only, "run a single job, e.g. T4.1");
  verify->add_option("--out", vf_out, "report path (default stdout)");
  add_probe_flags(verify, cfg);

  // explore [--trials N] [--out PATH]
  auto* explore = app.add_subcommand("explore", "randomized conjecture search");
  int ex_trials = 40;
  std::string ex_out;
  explore->add_option("--trials", ex_trials, "number of generator trials");
  explore->add_option("--out", ex_out, "report path (default stdout)");
  add_probe_flags(explore, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(validate_file);
    if (app.got_subcommand(tensor)) return cmd_tensor(tensor_file, tensor_weyl_out, tensor_out);
    if (app.got_subcommand(manifold))
      return cmd_manifold(man_family, man_point, man_dump, man_out, cfg);
    if (app.got_subcommand(probe))
      return cmd_probe(pr_family, pr_tensor, pr_property, pr_kind, pr_format, pr_out, cfg);
    if (app.got_subcommand(verify)) return cmd_verify(vf_only, vf_out, cfg);
    if (app.got_subcommand(explore)) return cmd_explore(ex_trials, ex_out, cfg);
  } catch (const ws::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ws::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    // validate reports structural-consistency failures as verdicts, not crashes
    return app.got_subcommand(validate) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
