#include "cesaro/spectrum.hpp"

#include <algorithm>
#include <array>

namespace cesaro {

std::string_view region_label(Region r) {
  switch (r) {
    case Region::sigma: return "Sigma";
    case Region::sigma0: return "Sigma0";
    case Region::one: return "{1}";
    case Region::zero_one_disc: return "{0,1}∪D(1)";
    case Region::closed_disc: return "closure(D(1))";
    default: return "unknown";
  }
}

bool region_contains(Region r, Complex z, double tol) {
  switch (r) {
    case Region::sigma: return std::abs(z) > tol && distance_to_sigma(z) <= tol;
    case Region::sigma0: return distance_to_sigma0(z) <= tol;
    case Region::one: return std::abs(z - 1.0) <= tol;
    case Region::zero_one_disc:
      return std::abs(z) <= tol || std::abs(z - 1.0) <= tol || std::abs(z - 0.5) < 0.5;
    case Region::closed_disc: return in_closed_disc(z, tol);
    default: return false;
  }
}

bool region_subset(Region a, Region b) {
  if (a == Region::unknown || b == Region::unknown) return false;
  // Chain {1} ⊆ Σ ⊆ Σ₀ ⊆ {0,1} ∪ D(1) ⊆ closure(D(1)).
  constexpr std::array<Region, 5> chain = {Region::one, Region::sigma, Region::sigma0, Region::zero_one_disc,
                                           Region::closed_disc};
  auto pos = [&](Region r) { return std::find(chain.begin(), chain.end(), r) - chain.begin(); };
  return pos(a) <= pos(b);
}

PointSpectrumVerdict point_spectrum_test(Index m, const WeightFamily& W, Index horizon, int k_max,
                                         const DecisionRule& rule) {
  if (m < 1) throw DomainError("eigen index m must be >= 1");
  PointSpectrumVerdict out;
  Index h = W.alpha().finite_horizon(horizon);
  if (h < 2) throw DomainError("horizon must be >= 2");
  auto alpha = W.alpha().range(1, h);
  out.verdict.horizon = h;
  if (m == 1) {
    // Δe₁ = 𝟏 lies in every step.
    out.verdict.status = Status::holds;
    out.verdict.log_sup_value = W.log_weight(1, alpha[0]);
    out.verdict.sup_value = std::exp(out.verdict.log_sup_value);
    out.verdict.witness_index = 1;
    out.k_found = 1;
    return out;
  }
  GrowthVerdict last;
  for (int k = 1; k <= k_max; ++k) {
    ScanTracker scan(static_cast<double>(h) / 10.0, Scale::log);
    double lc = 0.0;  // log C(n-1, m-1)
    for (Index n = m; n <= h; ++n) {
      scan.add(static_cast<double>(n), n, lc + W.log_weight(k, alpha[n - 1]));
      lc += std::log(static_cast<double>(n)) - std::log(static_cast<double>(n - m + 1));
    }
    last = make_verdict(scan, h, rule);
    last.status = boundedness_rule(last, rule);
    if (last.status == Status::holds) {
      out.k_found = k;
      break;
    }
  }
  out.verdict = last;
  TriState declared = W.alpha().flags().nuclear;
  if (declared != TriState::unknown) {
    out.verdict.status = declared == TriState::yes ? Status::holds : Status::fails;
    out.verdict.declared_override = true;
  }
  return out;
}

namespace {

TriState tri_of(Status s) {
  if (s == Status::holds) return TriState::yes;
  if (s == Status::fails) return TriState::no;
  return TriState::unknown;
}

}  // namespace

SpectralReport classify_spectrum(const WeightFamily& W, Index horizon, const ClassifyOptions& opts) {
  SpectralReport rep;
  rep.alpha_name = W.alpha().name();
  rep.nuclear_verdict = check_nuclear(W.alpha(), horizon, opts.rule);
  rep.loglog_verdict = check_loglog_bounded(W.alpha(), horizon, opts.rule);
  rep.nuclear = tri_of(rep.nuclear_verdict.status);
  rep.loglog_finite = tri_of(rep.loglog_verdict.status);

  if (rep.nuclear == TriState::yes) {
    rep.sigma_pt = Region::sigma;
    rep.sigma = Region::sigma;
    rep.sigma_star = Region::sigma0;
    rep.status = Status::holds;
  } else if (rep.nuclear == TriState::no) {
    rep.sigma_pt = Region::one;
    rep.sigma_star = Region::closed_disc;
    if (rep.loglog_finite == TriState::yes) {
      rep.sigma = Region::zero_one_disc;
      rep.status = Status::holds;
    } else if (rep.loglog_finite == TriState::no) {
      rep.sigma = Region::closed_disc;
      rep.status = Status::holds;
    }
  }

  if (opts.attach_evidence) {
    Index h = std::min(horizon, opts.evidence_horizon);
    for (Complex mu : opts.evidence_points) {
      if (distance_to_sigma0(mu) <= opts.evidence_delta) continue;
      rep.evidence.push_back({mu, equicontinuity_probe(mu, opts.evidence_delta, W, 1, h, opts.probe)});
    }
  }
  return rep;
}

GridResult sample_grid(const WeightFamily& W, const GridSpec& spec, Index classify_horizon, unsigned threads) {
  if (spec.resolution == 0 || spec.resolution > 1000) {
    throw DomainError("grid resolution must be in [1, 1000] points per axis");
  }
  if (!(spec.re_min <= spec.re_max) || !(spec.im_min <= spec.im_max)) {
    throw DomainError("grid ranges must satisfy min <= max");
  }
  GridResult g;
  g.spec = spec;
  ClassifyOptions copts;
  copts.attach_evidence = false;
  g.report = classify_spectrum(W, classify_horizon, copts);

  const Index R = spec.resolution;
  const double dre = (spec.re_max - spec.re_min) / static_cast<double>(R);
  const double dim = (spec.im_max - spec.im_min) / static_cast<double>(R);
  std::vector<Index> eligible;
  g.points.resize(R * R);
  for (Index row = 0; row < R; ++row) {
    for (Index col = 0; col < R; ++col) {
      GridPoint& p = g.points[row * R + col];
      p.z = {spec.re_min + (static_cast<double>(col) + 0.5) * dre,
             spec.im_max - (static_cast<double>(row) + 0.5) * dim};
      if (distance_to_sigma0(p.z) <= spec.margin) {
        p.region_label = "excluded";
        p.probe_status = "excluded";
        p.cls = PointClass::excluded;
        continue;
      }
      const SpectralReport& rep = g.report;
      if (rep.sigma == Region::unknown) {
        p.region_label = "unknown";
        p.cls = PointClass::inconclusive;
      } else if (region_contains(rep.sigma, p.z)) {
        p.region_label = region_label(rep.sigma);
        p.cls = PointClass::spectrum_region;
      } else if (region_contains(rep.sigma_star, p.z)) {
        p.region_label = region_label(rep.sigma_star);
        p.cls = PointClass::spectrum_region;
      } else {
        p.region_label = "resolvent";
        p.cls = PointClass::resolvent_evidence;
      }
      p.probe_status = "skipped";
      eligible.push_back(row * R + col);
    }
  }

  std::vector<Index> chosen;
  if (spec.probe_count > 0 && !eligible.empty()) {
    Index stride = std::max<Index>(1, eligible.size() / spec.probe_count);
    for (Index i = 0; i < spec.probe_count && i * stride < eligible.size(); ++i) {
      chosen.push_back(eligible[i * stride]);
    }
  }
  std::vector<ProbeVerdict> probes(chosen.size());
  parallel_for(chosen.size(), threads, [&](Index i) {
    const Complex z = g.points[chosen[i]].z;
    double delta = std::min(spec.probe_delta, 0.5 * distance_to_sigma0(z));
    probes[i] = equicontinuity_probe(z, delta, W, spec.k, spec.horizon, spec.probe);
  });
  for (Index i = 0; i < chosen.size(); ++i) {
    GridPoint& p = g.points[chosen[i]];
    const ProbeVerdict& v = probes[i];
    p.probe_status = to_string(v.status);
    p.probe_sup = v.sup_row_sum;
    p.l_found = v.l_found;
    // Probe and symbolic label must agree, otherwise the point is inconclusive.
    const bool agree = (v.status == Status::holds && p.cls == PointClass::resolvent_evidence) ||
                       (v.status == Status::fails && p.cls == PointClass::spectrum_region);
    if (!agree) p.cls = PointClass::inconclusive;
  }
  return g;
}

namespace {

std::string csv_field(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

}  // namespace

std::string grid_to_csv(const GridResult& g) {
  std::string out = "re,im,region_label,probe_status,probe_sup,l_found\n";
  for (const GridPoint& p : g.points) {
    bool probed = p.probe_status != "skipped" && p.probe_status != "excluded";
    out += fmt17(p.z.real()) + "," + fmt17(p.z.imag()) + "," + csv_field(p.region_label) + "," + p.probe_status + ",";
    out += probed ? fmt17(p.probe_sup) : "";
    out += ",";
    out += p.l_found ? std::to_string(*p.l_found) : "";
    out += "\n";
  }
  return out;
}

std::string grid_to_svg(const GridResult& g) {
  static constexpr std::array<const char*, 4> palette = {"#2c7bb6", "#d7191c", "#1a1a1a", "#fdae61"};
  const Index R = g.spec.resolution;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(R) + "\" height=\"" +
                    std::to_string(R) + "\" viewBox=\"0 0 " + std::to_string(R) + " " + std::to_string(R) +
                    "\" shape-rendering=\"crispEdges\">\n";
  for (Index row = 0; row < R; ++row) {
    Index col = 0;
    while (col < R) {
      PointClass c = g.points[row * R + col].cls;
      Index run = 1;
      while (col + run < R && g.points[row * R + col + run].cls == c) ++run;
      out += "<rect x=\"" + std::to_string(col) + "\" y=\"" + std::to_string(row) + "\" width=\"" +
             std::to_string(run) + "\" height=\"1\" fill=\"" + palette[static_cast<int>(c)] + "\"/>\n";
      col += run;
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace cesaro
