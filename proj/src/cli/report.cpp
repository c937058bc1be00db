#include "report.hpp"

#include "cesaro/cli.hpp"

namespace cesaro::cli {

Json num(double x) {
  if (std::isfinite(x)) return x;
  return fmt17(x);
}

Json to_json(Complex z) { return Json{{"re", num(z.real())}, {"im", num(z.imag())}}; }

Json to_json(const GrowthVerdict& v) {
  return Json{{"status", to_string(v.status)},
              {"horizon", v.horizon},
              {"sup_value", num(v.sup_value)},
              {"log_sup_value", num(v.log_sup_value)},
              {"witness_index", v.witness_index},
              {"grew_last_decade", v.grew_last_decade},
              {"declared_override", v.declared_override}};
}

namespace {

Json witness_json(const ProbeWitness& w) {
  return Json{{"mu", to_json(w.mu)}, {"l", w.l},           {"status", to_string(w.status)},
              {"log_sup", num(w.log_sup)}, {"row", w.row}, {"grew", w.grew}};
}

Json optional_int(const std::optional<int>& x) { return x ? Json(*x) : Json(nullptr); }

}  // namespace

Json to_json(const ProbeVerdict& v) {
  Json j{{"lambda", to_json(v.lambda)},
         {"delta", num(v.delta)},
         {"k", v.k},
         {"horizon", v.horizon},
         {"status", to_string(v.status)},
         {"l_found", optional_int(v.l_found)},
         {"sup_row_sum", num(v.sup_row_sum)},
         {"log_sup_row_sum", num(v.log_sup_row_sum)},
         {"worst", witness_json(v.worst)}};
  Json w = Json::array();
  for (const auto& x : v.witnesses) w.push_back(witness_json(x));
  j["witnesses"] = std::move(w);
  return j;
}

Json to_json(const SpectralReport& r) {
  Json ev = Json::array();
  for (const auto& e : r.evidence) ev.push_back(Json{{"mu", to_json(e.mu)}, {"probe", to_json(e.probe)}});
  return Json{{"alpha", r.alpha_name},
              {"status", to_string(r.status)},
              {"nuclear", to_string(r.nuclear)},
              {"loglog_finite", to_string(r.loglog_finite)},
              {"sigma_pt", region_label(r.sigma_pt)},
              {"sigma", region_label(r.sigma)},
              {"sigma_star", region_label(r.sigma_star)},
              {"nuclear_verdict", to_json(r.nuclear_verdict)},
              {"loglog_verdict", to_json(r.loglog_verdict)},
              {"evidence", std::move(ev)}};
}

Json to_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"label", c.label}, {"passed", c.passed}, {"value", num(c.value)}, {"detail", c.detail}});
  }
  return Json{{"suite", r.suite}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

Json to_json(const FtVerdict& v) {
  Json j = to_json(v.verdict);
  j["log_witness_n"] = num(v.log_witness_n);
  return j;
}

Json to_json(const FtActsReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    steps.push_back(Json{{"k", s.k},
                         {"l_found", optional_int(s.l_found)},
                         {"all_failed", s.all_failed},
                         {"last", to_json(s.last)}});
  }
  return Json{{"status", to_string(r.status)}, {"horizon", r.horizon}, {"l_max", r.l_max}, {"steps", std::move(steps)}};
}

Json header_json(const RunConfig& cfg, std::optional<Index> horizon, std::optional<Index> N) {
  Json c = Json::object();
  for (const auto& [k, v] : cfg.entries) {
    if (k == "out" || k == "svg" || k == "threads") continue;
    c[k] = v;
  }
  return Json{{"schema", "cesaro_lab/" + cfg.command + "/v1"},
              {"tool_version", kToolVersion},
              {"config_hash", cfg.hash_hex()},
              {"horizon", horizon ? Json(*horizon) : Json(nullptr)},
              {"N", N ? Json(*N) : Json(nullptr)},
              {"config", std::move(c)}};
}

std::string header_comment(const RunConfig& cfg, std::optional<Index> horizon, std::optional<Index> N) {
  std::string s = "# schema=cesaro_lab/" + cfg.command + "/v1\n";
  s += std::string("# tool_version=") + kToolVersion + "\n";
  s += "# config_hash=" + cfg.hash_hex() + "\n";
  s += "# horizon=" + (horizon ? std::to_string(*horizon) : std::string("none")) + "\n";
  s += "# N=" + (N ? std::to_string(*N) : std::string("none")) + "\n";
  for (const auto& [k, v] : cfg.entries) {
    if (k == "out" || k == "svg" || k == "threads") continue;
    s += "# " + k + "=" + v + "\n";
  }
  return s;
}

}  // namespace cesaro::cli
