#include "burrset/construct.hpp"

#include <algorithm>
#include <string>

#include "burrset/error.hpp"

namespace burr {

std::string_view to_string(CaseId c) {
  switch (c) {
    case CaseId::RangeLow: return "RangeLow";
    case CaseId::RangeMidJ: return "RangeMidJ";
    case CaseId::RangeHighGeneric: return "RangeHighGeneric";
    case CaseId::RangeHighSpecial: return "RangeHighSpecial";
  }
  return "unknown";
}

bool supported_b1(Value b1) noexcept {
  return b1 == 4 || b1 == 7 || b1 == 8 || b1 >= 11;
}

namespace {

// Extends prefix (reach c, last element last) towards total target.
bool extend_base(std::vector<Value>& prefix, Value c, Value target) {
  if (c == target) return true;
  const Value last = prefix.empty() ? 0 : prefix.back();
  for (Value v = last + 1; v <= c + 1 && c + v <= target; ++v) {
    const Value rest = target - c - v;
    // Later elements exceed v, so a nonzero remainder must too.
    if (rest != 0 && rest <= v) continue;
    prefix.push_back(v);
    if (extend_base(prefix, c + v, target)) return true;
    prefix.pop_back();
  }
  return false;
}

Value ceil_half(Value x) { return x / 2 + x % 2; }

void check_plan(const ConstructionPlan& p) {
  const Value b1 = p.b1;
  const bool low = p.b2 <= 4 * b1 + 4;
  const bool mid = p.b2 >= 4 * b1 + 5 && p.b2 <= 4 * b1 + 8;
  if ((p.case_id == CaseId::RangeLow) != low || (p.case_id == CaseId::RangeMidJ) != mid)
    throw InternalError("case split disagrees with b2 range");
  if (p.j && p.l) {
    const Value jmax = std::min(p.m / 2, b1 - 1);
    if (*p.j > jmax || *p.l > std::min(p.m - 2 * *p.j, b1 - 1))
      throw InternalError("(j, l) outside admissible range");
  }
  if (p.head.empty() || p.head.front() != b1 + 1)
    throw InternalError("head must begin with b1 + 1");
  for (std::size_t i = 1; i < p.head.size(); ++i)
    if (p.head[i] <= p.head[i - 1]) throw InternalError("head not strictly increasing");
}

}  // namespace

std::optional<ElementSeq> base_segment(Value b1) {
  if (b1 < 2) throw UsageError("b1 must be at least 2");
  std::vector<Value> prefix;
  if (!extend_base(prefix, 0, b1 - 1)) return std::nullopt;
  return ElementSeq(std::move(prefix));
}

ConstructionPlan plan_construction(Value b1, Value b2) {
  if (!supported_b1(b1))
    throw UnsupportedB1Error("b1 = " + std::to_string(b1) +
                             " is not in {4, 7, 8} or >= 11");
  if (b2 < 3 * b1 + 5 || b2 > 6 * b1 + 10)
    throw OutOfRangeError("b2 = " + std::to_string(b2) + " outside [" +
                          std::to_string(3 * b1 + 5) + ", " +
                          std::to_string(6 * b1 + 10) + "]");
  ConstructionPlan p;
  p.b1 = b1;
  p.b2 = b2;
  p.m = b2 - 3 * b1 - 5;
  const Value m = p.m;
  if (m <= b1 - 1) {
    p.case_id = CaseId::RangeLow;
    p.j = 0;
    p.l = m;
    p.head = {b1 + 1, b1 + 2, b1 + 3 + m};
  } else if (m <= b1 + 3) {
    p.case_id = CaseId::RangeMidJ;
    const Value j = ceil_half(m - b1 + 1);
    p.j = j;
    p.l = m - 2 * j;
    p.head = {b1 + 1, b1 + 2 + j, b1 + 3 + m - j};
  } else if (m != 2 * b1 + 5) {
    p.case_id = CaseId::RangeHighGeneric;
    p.head = {b1 + 1, b1 + 2, b1 + 3, m};
  } else {
    p.case_id = CaseId::RangeHighSpecial;
    p.head = {b1 + 1, b1 + 2, b1 + 4, 2 * b1 + 4};
  }
  check_plan(p);
  return p;
}

ElementSeq realize_head(const ConstructionPlan& plan) {
  auto base = base_segment(plan.b1);
  if (!base)
    throw InfeasibleBaseError("no base segment exists for b1 = " + std::to_string(plan.b1));
  std::vector<Value> out = base->elements();
  out.insert(out.end(), plan.head.begin(), plan.head.end());
  return ElementSeq(std::move(out));
}

ElementSeq realize(const ConstructionPlan& plan, Value horizon) {
  if (horizon < plan.min_horizon())
    throw UsageError("horizon must be at least 4*b1 + 6 + m = " +
                     std::to_string(plan.min_horizon()));
  std::vector<Value> out = realize_head(plan).elements();
  for (;;) {
    const auto last = static_cast<unsigned __int128>(out.back());
    const auto next = last * last;
    if (next > horizon) break;
    out.push_back(static_cast<Value>(next));
  }
  return ElementSeq(std::move(out));
}

GapReport derive_B(const ElementSeq& seq, Value horizon, bool exact, Value max_cap) {
  GapReport r;
  r.horizon = horizon;
  r.exclusions = gaps(sumset_of(seq, horizon, max_cap), horizon);
  r.exact = exact;
  return r;
}

}  // namespace burr
