#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>

#include "cesaro/cli.hpp"
#include "config.hpp"
#include "report.hpp"

namespace cesaro {

namespace {

using cli::Json;
using cli::RunConfig;

int exit_code(Status s) {
  switch (s) {
    case Status::holds: return 0;
    case Status::fails: return 1;
    default: return 2;
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open output file " + path);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct Common {
  std::string alpha = "preset:n";
  std::string base = "exp";
  Index horizon = 100000;
  unsigned threads = 1;
  std::string out;
};

void add_common(CLI::App* app, Common& c, bool with_alpha) {
  if (with_alpha) {
    app->add_option("--alpha", c.alpha, "preset:NAME or file:PATH")->capture_default_str();
    app->add_option("--base", c.base, "base sequence s_k: exp or k_plus_1")->capture_default_str();
  }
  app->add_option("--horizon", c.horizon, "largest index scanned")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--threads", c.threads, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--out", c.out, "output file (default stdout)");
}

void record_common(RunConfig& cfg, const Common& c, bool with_alpha) {
  if (with_alpha) {
    cfg.set("alpha", c.alpha);
    cfg.set("base", c.base);
  }
  cfg.set("horizon", std::to_string(c.horizon));
  cfg.set("threads", std::to_string(c.threads));
  cfg.set("out", c.out);
}

WeightFamily family(const Common& c) {
  return WeightFamily(cli::parse_alpha_spec(c.alpha), BaseSequence::from_name(c.base));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cesàro operator laboratory on weighted (LB) sequence spaces", "cesaro_lab"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  // classify
  Common cl;
  bool no_evidence = false;
  Index evidence_horizon = 100000;
  auto* classify = app.add_subcommand("classify", "point spectrum, spectrum and extended spectrum of C");
  add_common(classify, cl, true);
  classify->add_flag("--no-evidence", no_evidence, "skip the resolvent probes attached as evidence");
  classify->add_option("--evidence-horizon", evidence_horizon, "horizon of the evidence probes")
      ->capture_default_str();

  // verify
  Common ve;
  std::string suite;
  std::optional<Index> v_N, v_m, v_horizon;
  std::optional<int> v_samples;
  std::uint64_t v_seed = 1;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "factorizations, eigen, sandwich, resolvent, ergodic or finite")->required();
  verify->add_option("--N", v_N, "truncation size");
  verify->add_option("--m", v_m, "largest eigen index");
  verify->add_option("--samples", v_samples, "random samples or vectors");
  verify->add_option("--horizon", v_horizon, "scan horizon");
  verify->add_option("--seed", v_seed, "random seed")->capture_default_str();
  verify->add_option("--threads", ve.threads, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--out", ve.out, "output file (default stdout)");

  // grid
  Common gr;
  GridSpec gs;
  std::string re_range = "-0.25:1.25", im_range = "-0.75:0.75", svg;
  auto* grid = app.add_subcommand("grid", "sample a rectangle of the complex plane");
  add_common(grid, gr, true);
  grid->add_option("--re", re_range, "real range a:b")->capture_default_str();
  grid->add_option("--im", im_range, "imaginary range a:b")->capture_default_str();
  grid->add_option("--res", gs.resolution, "points per axis")->capture_default_str();
  grid->add_option("--probe-subsample", gs.probe_count, "number of probed points")->capture_default_str();
  grid->add_option("--probe-horizon", gs.horizon, "probe horizon")->capture_default_str();
  grid->add_option("--probe-delta", gs.probe_delta, "largest probe disc radius")->capture_default_str();
  grid->add_option("--margin", gs.margin, "exclusion distance around Sigma0")->capture_default_str();
  grid->add_option("--k", gs.k, "step k")->capture_default_str();
  grid->add_option("--l-max", gs.probe.l_max, "largest l searched")->capture_default_str();
  grid->add_option("--svg", svg, "also write an SVG heatmap");

  // probe
  Common pr;
  std::string lambda_text = "0.4,0.2";
  double p_delta = 0.02;
  int p_k = 1;
  ProbeOptions popts;
  popts.sampling = {16, 8};
  auto* probe = app.add_subcommand("probe", "equicontinuity probe of the resolvent on a disc");
  add_common(probe, pr, true);
  probe->add_option("--lambda", lambda_text, "disc centre re,im")->capture_default_str();
  probe->add_option("--delta", p_delta, "disc radius")->capture_default_str();
  probe->add_option("--k", p_k, "step k")->capture_default_str();
  probe->add_option("--l-max", popts.l_max, "largest l - k searched")->capture_default_str();
  probe->add_option("--ring", popts.sampling.ring, "boundary samples")->capture_default_str();
  probe->add_option("--interior", popts.sampling.interior, "interior samples")->capture_default_str();

  // ergodic
  Common er;
  int e_k = 1;
  Index e_N = 10;
  std::string x_spec = "e1";
  double tol = 1e-8;
  Index m_cap = 10000;
  auto* ergodic = app.add_subcommand("ergodic", "trace of q_k(C^m x - P x)");
  ergodic->add_option("--alpha", er.alpha, "preset:NAME or file:PATH")->capture_default_str();
  ergodic->add_option("--base", er.base, "base sequence s_k: exp or k_plus_1")->capture_default_str();
  ergodic->add_option("--k", e_k, "step k")->capture_default_str();
  ergodic->add_option("--N", e_N, "truncation size")->capture_default_str();
  ergodic->add_option("--x", x_spec, "e1, ones, e:R or comma-separated values")->capture_default_str();
  ergodic->add_option("--tol", tol, "distance tolerance")->capture_default_str();
  ergodic->add_option("--m-cap", m_cap, "largest power")->capture_default_str();
  ergodic->add_option("--out", er.out, "output file (default stdout)");

  // finite
  Common fi;
  fi.horizon = 100000;
  std::string weights = "finite:log_np1";
  int l_max = 64, k_probe = 4, max_block = 80;
  auto* finite = app.add_subcommand("finite", "continuity of C on finite-type duals");
  add_common(finite, fi, false);
  finite->add_option("--weights", weights, "finite:log_np1, finite:staircase, preset:NAME or file:PATH")
      ->capture_default_str();
  finite->add_option("--l-max", l_max, "largest l searched")->capture_default_str();
  finite->add_option("--k-probe", k_probe, "steps k tested")->capture_default_str();
  finite->add_option("--max-block", max_block, "last staircase block evaluated")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    RunConfig cfg;
    if (*classify) {
      cfg.command = "classify";
      record_common(cfg, cl, true);
      cfg.set("evidence", no_evidence ? "false" : "true");
      cfg.set("evidence_horizon", std::to_string(evidence_horizon));
      ClassifyOptions opts;
      opts.attach_evidence = !no_evidence;
      opts.evidence_horizon = evidence_horizon;
      opts.probe.threads = cl.threads;
      SpectralReport rep = classify_spectrum(family(cl), cl.horizon, opts);
      Json j = cli::header_json(cfg, cl.horizon, std::nullopt);
      j["result"] = cli::to_json(rep);
      emit(dump(j), cl.out, out);
      return exit_code(rep.status);
    }
    if (*verify) {
      cfg.command = "verify";
      cfg.set("suite", suite);
      cfg.set("N", v_N ? std::to_string(*v_N) : "default");
      cfg.set("m", v_m ? std::to_string(*v_m) : "default");
      cfg.set("samples", v_samples ? std::to_string(*v_samples) : "default");
      cfg.set("horizon", v_horizon ? std::to_string(*v_horizon) : "default");
      cfg.set("seed", std::to_string(v_seed));
      cfg.set("threads", std::to_string(ve.threads));
      cfg.set("out", ve.out);
      SuiteOptions so{v_N, v_m, v_samples, v_horizon, v_seed, ve.threads};
      SuiteReport rep = run_suite(suite, so);
      Json j = cli::header_json(cfg, v_horizon, v_N);
      j["result"] = cli::to_json(rep);
      emit(dump(j), ve.out, out);
      return rep.passed() ? 0 : 1;
    }
    if (*grid) {
      cfg.command = "grid";
      record_common(cfg, gr, true);
      std::tie(gs.re_min, gs.re_max) = cli::parse_range(re_range);
      std::tie(gs.im_min, gs.im_max) = cli::parse_range(im_range);
      cfg.set("re", fmt17(gs.re_min) + ":" + fmt17(gs.re_max));
      cfg.set("im", fmt17(gs.im_min) + ":" + fmt17(gs.im_max));
      cfg.set("res", std::to_string(gs.resolution));
      cfg.set("probe_subsample", std::to_string(gs.probe_count));
      cfg.set("probe_horizon", std::to_string(gs.horizon));
      cfg.set("probe_delta", fmt17(gs.probe_delta));
      cfg.set("margin", fmt17(gs.margin));
      cfg.set("k", std::to_string(gs.k));
      cfg.set("l_max", std::to_string(gs.probe.l_max));
      cfg.set("svg", svg);
      GridResult g = sample_grid(family(gr), gs, gr.horizon, gr.threads);
      std::string header = cli::header_comment(cfg, gr.horizon, gs.horizon);
      emit(header + grid_to_csv(g), gr.out, out);
      if (!svg.empty()) {
        std::string body = grid_to_svg(g);
        std::string comment = "<!--\n" + header + "-->\n";
        auto pos = body.find('\n');
        emit(body.substr(0, pos + 1) + comment + body.substr(pos + 1), svg, out);
      }
      return 0;
    }
    if (*probe) {
      cfg.command = "probe";
      record_common(cfg, pr, true);
      Complex lambda = cli::parse_complex(lambda_text);
      cfg.set("lambda", fmt17(lambda.real()) + "," + fmt17(lambda.imag()));
      cfg.set("delta", fmt17(p_delta));
      cfg.set("k", std::to_string(p_k));
      cfg.set("l_max", std::to_string(popts.l_max));
      cfg.set("ring", std::to_string(popts.sampling.ring));
      cfg.set("interior", std::to_string(popts.sampling.interior));
      popts.threads = pr.threads;
      ProbeVerdict v = equicontinuity_probe(lambda, p_delta, family(pr), p_k, pr.horizon, popts);
      Json j = cli::header_json(cfg, pr.horizon, std::nullopt);
      j["result"] = cli::to_json(v);
      emit(dump(j), pr.out, out);
      return exit_code(v.status);
    }
    if (*ergodic) {
      cfg.command = "ergodic";
      cfg.set("alpha", er.alpha);
      cfg.set("base", er.base);
      cfg.set("k", std::to_string(e_k));
      cfg.set("N", std::to_string(e_N));
      cfg.set("x", x_spec);
      cfg.set("tol", fmt17(tol));
      cfg.set("m_cap", std::to_string(m_cap));
      cfg.set("out", er.out);
      auto x = cli::parse_vector_spec(x_spec, e_N);
      IterationTrace t = iterates_limit_check(x, family(er), e_k, tol, m_cap);
      std::string text = cli::header_comment(cfg, std::nullopt, e_N);
      text += "# status=" + t.status + "\n";
      text += trace_to_csv(t);
      emit(text, er.out, out);
      return t.converged ? 0 : 2;
    }
    if (*finite) {
      cfg.command = "finite";
      record_common(cfg, fi, false);
      cfg.set("weights", weights);
      cfg.set("l_max", std::to_string(l_max));
      cfg.set("k_probe", std::to_string(k_probe));
      cfg.set("max_block", std::to_string(max_block));
      FiniteTypeWeights W = cli::parse_finite_spec(weights, max_block);
      FtActsReport acts = ft_cesaro_acts(W, fi.horizon, l_max, k_probe);
      Json j = cli::header_json(cfg, fi.horizon, std::nullopt);
      Json res{{"weights", W.alpha.name()}, {"acts", cli::to_json(acts)}};
      res["nuclearity_k1_l2"] = cli::to_json(gp_nuclearity(W, 1, 2, std::min(fi.horizon, kDenseFiniteLimit)));
      if (W.staircase) {
        Json js = Json::array();
        for (int k = 1; k <= 5; ++k) js.push_back(staircase_j(k).get_str());
        res["staircase_j"] = std::move(js);
        Json lb = Json::array();
        for (int l = 1; l <= 8; ++l) {
          lb.push_back(Json{{"l", l}, {"k0_T1e3", staircase_divergence_index(l, 1e3)}});
        }
        res["lower_bound_divergence_index"] = std::move(lb);
      }
      j["result"] = std::move(res);
      emit(dump(j), fi.out, out);
      return exit_code(acts.status);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace cesaro
