#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace cesaro::cli {

void RunConfig::set(std::string key, std::string value) {
  for (auto& [k, v] : entries) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries.emplace_back(std::move(key), std::move(value));
}

std::string RunConfig::canonical() const {
  std::string s = "command=" + command + "\n";
  for (const auto& [k, v] : entries) {
    if (k == "out" || k == "svg" || k == "threads") continue;
    s += k + "=" + v + "\n";
  }
  return s;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t RunConfig::hash() const { return fnv1a64(canonical()); }

std::string RunConfig::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

namespace {

std::pair<std::string, std::string> split_spec(const std::string& spec) {
  auto pos = spec.find(':');
  if (pos == std::string::npos) throw DomainError("expected KIND:VALUE, got '" + spec + "'");
  return {spec.substr(0, pos), spec.substr(pos + 1)};
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw DomainError("not a number: '" + text + "'");
  return x;
}

}  // namespace

AlphaSequence parse_alpha_spec(const std::string& spec) {
  auto [kind, value] = split_spec(spec);
  if (kind == "preset") return make_alpha(value);
  if (kind == "file") return AlphaSequence::from_csv(value);
  throw DomainError("unknown alpha spec kind '" + kind + "' (use preset:NAME or file:PATH)");
}

FiniteTypeWeights parse_finite_spec(const std::string& spec, int max_block) {
  auto [kind, value] = split_spec(spec);
  if (kind == "finite") {
    if (value == "log_np1") return finite_log_np1();
    if (value == "staircase") return finite_staircase(max_block);
    throw DomainError("unknown finite-type preset '" + value + "' (log_np1, staircase)");
  }
  return finite_from_alpha(parse_alpha_spec(spec));
}

std::pair<double, double> parse_range(const std::string& text) {
  auto pos = text.find(':', 1);
  if (pos == std::string::npos) throw DomainError("expected a range a:b, got '" + text + "'");
  double a = parse_double(text.substr(0, pos));
  double b = parse_double(text.substr(pos + 1));
  if (!(a <= b)) throw DomainError("range '" + text + "' must satisfy a <= b");
  return {a, b};
}

Complex parse_complex(const std::string& text) {
  auto pos = text.find(',');
  if (pos == std::string::npos) return {parse_double(text), 0.0};
  return {parse_double(text.substr(0, pos)), parse_double(text.substr(pos + 1))};
}

std::vector<Complex> parse_vector_spec(const std::string& text, Index N) {
  if (N < 2) throw DomainError("truncation N must be >= 2");
  std::vector<Complex> x(N, 0.0);
  if (text == "ones") {
    std::fill(x.begin(), x.end(), 1.0);
  } else if (text == "e1") {
    x[0] = 1.0;
  } else if (text.rfind("e:", 0) == 0) {
    double r = parse_double(text.substr(2));
    if (r < 1 || r > static_cast<double>(N) || r != std::floor(r)) throw DomainError("e:R needs 1 <= R <= N");
    x[static_cast<Index>(r) - 1] = 1.0;
  } else {
    std::stringstream ss(text);
    std::string item;
    Index i = 0;
    while (std::getline(ss, item, ',')) {
      if (i >= N) throw DomainError("vector has more than N entries");
      x[i++] = parse_double(item);
    }
    if (i == 0) throw DomainError("empty vector");
  }
  return x;
}

}  // namespace cesaro::cli
