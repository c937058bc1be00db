#include "cesaro/weights.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

namespace cesaro {

namespace {

AlphaValue plain(double a) { return {a, std::log(a)}; }

// Presets undefined below `first` are padded by a strictly increasing ramp
// ending below the first defined value, kept above 1 when that value exceeds 1.
AlphaSequence::Generator padded(Index first, std::function<AlphaValue(Index)> tail) {
  AlphaValue head = tail(first);
  double a_first = head.value;
  return [first, tail, a_first](Index n) -> AlphaValue {
    if (n >= first) return tail(n);
    double t = static_cast<double>(n) / static_cast<double>(first);
    if (a_first > 1.0) {
      double excess = (a_first - 1.0) * t;
      return {1.0 + excess, std::log1p(excess)};
    }
    return plain(a_first * t);
  };
}

// Staircase preset: j(1)=1, j(k+1)=2(k+1) j(k)^k.
// Only j(1..4) fit in 64-bit indices; every larger index sits in block 4.
constexpr std::array<Index, 4> kStaircase = {1, 4, 96, 7077888};

int staircase_block(Index n) {
  int k = 1;
  while (k < 4 && n >= kStaircase[k]) ++k;
  return k;
}

double staircase_beta(int k) {
  return static_cast<double>(k) * std::pow(static_cast<double>(kStaircase[k - 1]), k);
}

double staircase_gamma(Index n) { return 3.0 - 1.0 / static_cast<double>(n + 1); }

AlphaValue staircase_alpha(Index n) {
  double a = std::log(staircase_beta(staircase_block(n)) + staircase_gamma(n));
  return plain(a);
}

double staircase_increment(Index n) {
  int k = staircase_block(n);
  if (staircase_block(n + 1) != k) {
    return staircase_alpha(n + 1).value - staircase_alpha(n).value;
  }
  double dg = 1.0 / (static_cast<double>(n + 1) * static_cast<double>(n + 2));
  return std::log1p(dg / (staircase_beta(k) + staircase_gamma(n)));
}

constexpr TriState Y = TriState::yes;
constexpr TriState N = TriState::no;
constexpr TriState U = TriState::unknown;

struct Preset {
  DeclaredFlags flags;
  std::function<AlphaSequence(const std::string&, const DeclaredFlags&)> build;
};

const std::map<std::string, Preset, std::less<>>& presets() {
  static const std::map<std::string, Preset, std::less<>> table = [] {
    std::map<std::string, Preset, std::less<>> t;
    auto simple = [](AlphaSequence::Generator g) {
      return [g](const std::string& name, const DeclaredFlags& f) { return AlphaSequence(name, g, f); };
    };
    t["n"] = {{Y, Y, Y, Y}, simple([](Index n) { return plain(static_cast<double>(n)); })};
    t["n_sq"] = {{Y, Y, Y, Y}, simple([](Index n) {
                   double x = static_cast<double>(n);
                   return AlphaValue{x * x, 2.0 * std::log(x)};
                 })};
    t["n_log_n"] = {{Y, Y, Y, Y}, simple(padded(2, [](Index n) {
                      double x = static_cast<double>(n);
                      return plain(x * std::log(x));
                    }))};
    t["log_n_plus_1"] = {{Y, Y, N, Y},
                         simple([](Index n) { return plain(std::log(static_cast<double>(n) + 1.0)); })};
    t["log_n"] = {{Y, Y, N, Y},
                  simple(padded(2, [](Index n) { return plain(std::log(static_cast<double>(n))); }))};
    t["sqrt_n"] = {{Y, Y, N, Y}, simple([](Index n) {
                     double x = static_cast<double>(n);
                     return AlphaValue{std::sqrt(x), 0.5 * std::log(x)};
                   })};
    t["n_pow_n"] = {{Y, N, Y, Y}, simple([](Index n) {
                      double x = static_cast<double>(n);
                      return AlphaValue{std::pow(x, x), x * std::log(x)};
                    })};
    t["loglog_n"] = {{N, Y, N, Y}, simple(padded(27, [](Index n) {
                       return plain(std::log(std::log(static_cast<double>(n))));
                     }))};
    t["logloglog_n"] = {{N, Y, N, N}, simple(padded(7625597484987ULL, [](Index n) {
                          return plain(std::log(std::log(std::log(static_cast<double>(n)))));
                        }))};
    t["staircase"] = {{U, U, U, U}, [](const std::string& name, const DeclaredFlags& f) {
                         return AlphaSequence(name, staircase_alpha, f, std::nullopt, staircase_increment);
                       }};
    return t;
  }();
  return table;
}

}  // namespace

AlphaSequence::AlphaSequence(std::string name, Generator generator, DeclaredFlags flags,
                             std::optional<Index> length, Increment increment)
    : name_(std::move(name)),
      generator_(std::move(generator)),
      flags_(flags),
      length_(length),
      increment_(std::move(increment)) {}

AlphaSequence AlphaSequence::from_function(std::string name, std::function<double(Index)> alpha,
                                           DeclaredFlags flags) {
  AlphaSequence seq(std::move(name), [alpha](Index n) { return plain(alpha(n)); }, flags);
  seq.range(1, 16);
  return seq;
}

AlphaSequence AlphaSequence::from_values(std::string name, std::vector<double> values) {
  if (values.empty()) throw DomainError("alpha data is empty");
  auto data = std::make_shared<const std::vector<double>>(std::move(values));
  Index len = data->size();
  AlphaSequence seq(std::move(name), [data](Index n) { return plain((*data)[n - 1]); }, {}, len);
  seq.range(1, len);
  return seq;
}

AlphaSequence AlphaSequence::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open alpha file: " + path);
  std::vector<double> values;
  std::string line;
  Index line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double n = 0, a = 0;
    if (!(fields >> n >> a)) {
      if (values.empty() && line_no == 1) continue;
      throw DomainError("malformed alpha row at line " + std::to_string(line_no));
    }
    if (n != static_cast<double>(values.size() + 1)) {
      throw DomainError("alpha rows must be n = 1, 2, ... (line " + std::to_string(line_no) + ")");
    }
    values.push_back(a);
  }
  return from_values("file:" + path, std::move(values));
}

AlphaValue AlphaSequence::raw(Index n) const {
  if (n == 0) throw DomainError("alpha index must be >= 1");
  if (length_ && n > *length_) {
    throw DomainError("alpha index " + std::to_string(n) + " beyond data length " + std::to_string(*length_));
  }
  AlphaValue v = generator_(n);
  if (!(v.value > 0.0) || std::isnan(v.log_value)) {
    throw DomainError(name_ + ": alpha_" + std::to_string(n) + " is not positive");
  }
  return v;
}

void AlphaSequence::check_step(Index n, const AlphaValue& prev, const AlphaValue& cur) const {
  bool ok;
  if (increment_) {
    ok = increment_(n - 1) > 0.0 && cur.value >= prev.value;
  } else if (std::isfinite(prev.value) && std::isfinite(cur.value)) {
    ok = cur.value > prev.value;
  } else {
    ok = cur.log_value > prev.log_value;
  }
  if (!ok) {
    throw MonotonicityError(name_ + ": alpha not strictly increasing at n=" + std::to_string(n));
  }
}

AlphaValue AlphaSequence::at(Index n) const {
  AlphaValue cur = raw(n);
  if (n >= 2) check_step(n, raw(n - 1), cur);
  return cur;
}

std::vector<AlphaValue> AlphaSequence::range(Index first, Index last) const {
  std::vector<AlphaValue> out;
  if (last < first) return out;
  out.reserve(last - first + 1);
  AlphaValue prev = first >= 2 ? raw(first - 1) : AlphaValue{0.0, -kInf};
  for (Index n = first; n <= last; ++n) {
    AlphaValue cur = raw(n);
    if (n >= 2) check_step(n, prev, cur);
    out.push_back(cur);
    prev = cur;
  }
  return out;
}

Index AlphaSequence::finite_horizon(Index requested) const {
  Index hi = length_ ? std::min(requested, *length_) : requested;
  if (hi == 0 || std::isfinite(raw(hi).value)) return hi;
  Index lo = 1;  // raw(lo) finite, raw(hi) infinite
  if (!std::isfinite(raw(1).value)) return 0;
  while (hi - lo > 1) {
    Index mid = lo + (hi - lo) / 2;
    if (std::isfinite(raw(mid).value)) lo = mid; else hi = mid;
  }
  return lo;
}

AlphaSequence make_alpha(std::string_view preset) {
  const auto& table = presets();
  auto it = table.find(preset);
  if (it == table.end()) throw DomainError("unknown alpha preset: " + std::string(preset));
  return it->second.build(it->first, it->second.flags);
}

std::vector<std::string> alpha_preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : presets()) names.push_back(name);
  return names;
}

BaseSequence::BaseSequence(std::string name, std::function<double(int)> log_s)
    : name_(std::move(name)), log_s_(std::move(log_s)) {}

BaseSequence BaseSequence::exponential() {
  return BaseSequence("exp", [](int k) { return static_cast<double>(k); });
}

BaseSequence BaseSequence::shifted_linear() {
  return BaseSequence("k_plus_1", [](int k) { return std::log(static_cast<double>(k) + 1.0); });
}

BaseSequence BaseSequence::custom(std::string name, std::function<double(int)> s) {
  double prev = 1.0;
  for (int k = 1; k <= 64; ++k) {
    double sk = s(k);
    if (!(sk > prev)) throw DomainError("base sequence must be strictly increasing in (1, inf)");
    prev = sk;
  }
  return BaseSequence(std::move(name), [s](int k) { return std::log(s(k)); });
}

BaseSequence BaseSequence::from_name(std::string_view name) {
  if (name == "exp") return exponential();
  if (name == "k_plus_1") return shifted_linear();
  throw DomainError("unknown base sequence: " + std::string(name));
}

double BaseSequence::log_s(int k) const {
  if (k < 1) throw DomainError("weight step k must be >= 1");
  return log_s_(k);
}

WeightFamily::WeightFamily(AlphaSequence alpha, BaseSequence base)
    : alpha_(std::move(alpha)), base_(std::move(base)) {}

double WeightFamily::log_weight(int k, const AlphaValue& a) const {
  double ls = base_.log_s(k);
  if (std::isfinite(a.value)) return -a.value * ls;
  return -std::exp(a.log_value + std::log(ls));
}

namespace {

Index clamp_horizon(const AlphaSequence& alpha, Index horizon, Index extra) {
  Index h = horizon;
  if (alpha.length()) {
    if (*alpha.length() < extra + 1) throw DomainError("alpha data too short for this scan");
    h = std::min(h, *alpha.length() - extra);
  }
  return h;
}

template <class Score>
GrowthVerdict ratio_scan(const AlphaSequence& alpha, Index first, Index horizon, Index extra,
                         TriState declared, const DecisionRule& rule, Score score) {
  if (horizon < first) throw DomainError("horizon too small for this scan");
  Index h = clamp_horizon(alpha, horizon, extra);
  auto values = alpha.range(1, h + extra);
  ScanTracker scan(static_cast<double>(h) / 10.0, Scale::plain);
  for (Index n = first; n <= h; ++n) {
    scan.add(static_cast<double>(n), n, score(n, values));
  }
  GrowthVerdict v = make_verdict(scan, h, rule);
  apply_declared(v, declared, rule);
  return v;
}

double ratio_over_alpha(double numerator, const AlphaValue& a) {
  if (numerator == 0.0) return 0.0;
  return std::exp(std::log(numerator) - a.log_value);
}

}  // namespace

GrowthVerdict check_nuclear(const AlphaSequence& alpha, Index horizon, const DecisionRule& rule) {
  return ratio_scan(alpha, 2, horizon, 0, alpha.flags().nuclear, rule,
                    [](Index n, const std::vector<AlphaValue>& a) {
                      return ratio_over_alpha(std::log(static_cast<double>(n)), a[n - 1]);
                    });
}

GrowthVerdict check_shift_stable(const AlphaSequence& alpha, Index horizon, const DecisionRule& rule) {
  return ratio_scan(alpha, 1, horizon, 1, alpha.flags().shift_stable, rule,
                    [](Index n, const std::vector<AlphaValue>& a) {
                      return std::exp(a[n].log_value - a[n - 1].log_value);
                    });
}

GrowthVerdict check_delta_continuity(const AlphaSequence& alpha, Index horizon, const DecisionRule& rule) {
  return ratio_scan(alpha, 1, horizon, 0, alpha.flags().delta_continuous, rule,
                    [](Index n, const std::vector<AlphaValue>& a) {
                      return ratio_over_alpha(static_cast<double>(n), a[n - 1]);
                    });
}

GrowthVerdict check_loglog_bounded(const AlphaSequence& alpha, Index horizon, const DecisionRule& rule) {
  return ratio_scan(alpha, 3, horizon, 0, alpha.flags().loglog_finite, rule,
                    [](Index n, const std::vector<AlphaValue>& a) {
                      return ratio_over_alpha(std::log(std::log(static_cast<double>(n))), a[n - 1]);
                    });
}

DominationResult check_polynomial_domination(const AlphaSequence& alpha, double gamma, Index horizon,
                                             const DominationOptions& opts, const DecisionRule& rule) {
  if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
  if (horizon < 2) throw DomainError("horizon must be >= 2");
  Index h = clamp_horizon(alpha, horizon, 0);
  auto values = alpha.range(1, h);
  auto scan_at = [&](int M) {
    ScanTracker scan(static_cast<double>(h) / 10.0, Scale::log);
    for (Index n = 1; n <= h; ++n) {
      const AlphaValue& a = values[n - 1];
      double penalty = std::isfinite(a.value) ? M * a.value : kInf;
      scan.add(static_cast<double>(n), n, gamma * std::log(static_cast<double>(n)) - penalty);
    }
    return make_verdict(scan, h, rule);
  };

  DominationResult result;
  TriState declared = alpha.flags().nuclear;
  if (declared == TriState::no) {
    result.verdict = scan_at(opts.m_max);
    result.verdict.status = Status::fails;
    result.verdict.declared_override = true;
    return result;
  }
  for (int M = 1; M <= opts.m_max; ++M) {
    GrowthVerdict v = scan_at(M);
    if (v.log_sup_value <= opts.log_bound && !v.grew_last_decade) {
      result.M = M;
      result.verdict = v;
      if (declared == TriState::yes) {
        result.verdict.status = Status::holds;
        result.verdict.declared_override = true;
      }
      return result;
    }
  }
  result.verdict = scan_at(opts.m_max);
  result.verdict.status = Status::fails;
  return result;
}

}  // namespace cesaro
