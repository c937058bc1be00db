#include "cesaro/common.hpp"

#include <algorithm>
#include <cstdio>

namespace cesaro {

std::string_view to_string(TriState t) {
  switch (t) {
    case TriState::yes: return "true";
    case TriState::no: return "false";
    default: return "unknown";
  }
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    default: return "inconclusive";
  }
}

std::string fmt17(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ScanTracker::ScanTracker(double late_from, Scale scale) : late_from_(late_from), scale_(scale) {}

void ScanTracker::add(double position, Index index, double score) {
  if (std::isnan(score)) score = kInf;
  if (!any_ || score > sup_) {
    sup_ = score;
    witness_ = index;
  }
  any_ = true;
  if (position > late_from_) {
    late_max_ = std::max(late_max_, score);
  } else {
    early_max_ = std::max(early_max_, score);
  }
}

bool ScanTracker::grew(double tolerance) const {
  if (late_max_ == -kInf) return false;
  if (early_max_ == -kInf) return true;
  if (early_max_ == kInf) return false;
  return late_max_ > early_max_ + tolerance * std::max(1.0, std::abs(early_max_));
}

double ScanTracker::sup_value() const {
  return scale_ == Scale::log ? std::exp(sup_) : sup_;
}

double ScanTracker::log_sup() const {
  if (scale_ == Scale::log) return sup_;
  return sup_ > 0 ? std::log(sup_) : -kInf;
}

GrowthVerdict make_verdict(const ScanTracker& scan, Index horizon, const DecisionRule& rule) {
  GrowthVerdict v;
  v.horizon = horizon;
  v.sup_value = scan.sup_value();
  v.log_sup_value = scan.log_sup();
  v.witness_index = scan.witness();
  v.grew_last_decade = scan.grew(rule.growth_tolerance);
  return v;
}

Status divergence_rule(const GrowthVerdict& v, const DecisionRule& rule) {
  if (v.log_sup_value > std::log(rule.divergence_threshold) && v.grew_last_decade) {
    return Status::fails;
  }
  return Status::inconclusive;
}

Status boundedness_rule(const GrowthVerdict& v, const DecisionRule& rule) {
  bool above = v.log_sup_value > std::log(rule.divergence_threshold);
  if (!above && !v.grew_last_decade) return Status::holds;
  if (above && v.grew_last_decade) return Status::fails;
  return Status::inconclusive;
}

void apply_declared(GrowthVerdict& v, TriState declared, const DecisionRule& rule) {
  if (declared == TriState::yes) {
    v.status = Status::holds;
    v.declared_override = true;
  } else if (declared == TriState::no) {
    v.status = Status::fails;
    v.declared_override = true;
  } else {
    v.status = divergence_rule(v, rule);
  }
}

}  // namespace cesaro
