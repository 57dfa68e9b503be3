#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "burrset/sumset.hpp"

namespace burr {

// Clauses of the completeness-chain lemma for a base segment a_1..a_k < b1.
enum class ChainClause {
  FirstIsOne,       // c_1 = 1
  SecondReachThree, // c_2 = 3 (only checked when k >= 2)
  Growth,           // a_{i+1} <= c_i + 1
  ReachBelowB1,     // c_k = b1 - 1
  SumsetInterval,   // P({a_1..a_i}) = [0, c_i], cross-checked by the sumset engine
};

std::string_view to_string(ChainClause c);

struct ChainViolation {
  std::size_t index;  // 1-based i the clause refers to
  ChainClause clause;
  friend bool operator==(const ChainViolation&, const ChainViolation&) = default;
};

struct Lemma21Report {
  std::size_t k = 0;
  std::vector<Value> chain;  // c_1..c_k
  bool pass = false;
  std::vector<ChainViolation> violations;
};

// Throws UsageError if b1 < 2, b1 is an element, or no element is below b1.
Lemma21Report verify_lemma21(const ElementSeq& seq, Value b1);

enum class HeadClause {
  NextIsB1PlusOne,     // a_{k+1} = b1 + 1
  SecondBound,         // a_{k+2} <= 2 b1 + 1
  ThirdBound,          // a_{k+3} <= a_{k+2} + b1
  B2LowerBound,        // b2 >= a_{k+3} + a_{k+2} + b1
  PrefixPattern,       // P(a_1..a_{k+3}) = [0, a_{k+3}+a_{k+2}+2b1] \ {b1, a_{k+3}+a_{k+2}+b1}
};

inline constexpr std::size_t kHeadClauseCount = 5;

std::string_view to_string(HeadClause c);

struct ClauseResult {
  HeadClause clause;
  bool pass;
};

struct Lemma22Report {
  std::size_t k = 0;
  Value a_k1 = 0;
  Value a_k2 = 0;
  Value a_k3 = 0;
  std::vector<ClauseResult> clause_results;  // one per HeadClause, in order
  bool pass = false;
};

// Requires b2 >= 3 b1 + 5 and at least k + 3 elements.
Lemma22Report verify_lemma22(const ElementSeq& seq, Value b1, Value b2);

// First `count` gaps of s in [0, limit].
std::vector<Value> first_gaps(const SumSet& s, Value limit, std::size_t count);

}  // namespace burr
