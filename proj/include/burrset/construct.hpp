#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "burrset/sumset.hpp"

namespace burr {

// Which head recipe applies, by m = b2 - 3 b1 - 5.
enum class CaseId {
  RangeLow,          // 0 <= m <= b1 - 1
  RangeMidJ,         // b1 <= m <= b1 + 3
  RangeHighGeneric,  // b1 + 4 <= m <= 3 b1 + 5, m != 2 b1 + 5
  RangeHighSpecial,  // m = 2 b1 + 5
};

std::string_view to_string(CaseId c);

struct ConstructionPlan {
  Value b1 = 0;
  Value b2 = 0;
  Value m = 0;
  CaseId case_id = CaseId::RangeLow;
  // Only the two low cases pick (j, l) explicitly.
  std::optional<Value> j;
  std::optional<Value> l;
  // a_{k+1}, a_{k+2}, a_{k+3} and, for the high cases, a_{k+4}.
  std::vector<Value> head;

  static constexpr std::string_view tail_rule = "square of previous element";

  // Horizon below which the first three exclusions are decided: 4 b1 + 6 + m.
  Value min_horizon() const noexcept { return 4 * b1 + 6 + m; }
};

struct GapReport {
  Value horizon = 0;
  std::vector<Value> exclusions;
  bool exact = false;
};

// b1 values for which the sharp construction is stated: {4, 7, 8} and b >= 11.
bool supported_b1(Value b1) noexcept;

// Lexicographically smallest A_1 in [1, b1-1] with P(A_1) = [0, b1-1], or
// nullopt if none exists. Throws UsageError for b1 < 2.
std::optional<ElementSeq> base_segment(Value b1);

// Throws UnsupportedB1Error / OutOfRangeError on bad input.
ConstructionPlan plan_construction(Value b1, Value b2);

// base ++ head ++ square tail, with every element of the infinite sequence
// that is <= horizon included. Throws InfeasibleBaseError or UsageError.
ElementSeq realize(const ConstructionPlan& plan, Value horizon);

// The head alone (base ++ head), i.e. the finite witness without tail.
ElementSeq realize_head(const ConstructionPlan& plan);

// exact is passed through: the caller certifies all omitted elements exceed horizon.
GapReport derive_B(const ElementSeq& seq, Value horizon, bool exact = false,
                   Value max_cap = kDefaultMaxCap);

}  // namespace burr
