#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "burrset/sumset.hpp"

namespace burr {

// The three smallest elements of B. Requires 2 <= b1 < b2 < b3.
struct ExclusionTriple {
  Value b1 = 0;
  Value b2 = 0;
  Value b3 = 0;

  // Throws UsageError when the ordering invariant fails.
  void validate() const;
  friend bool operator==(const ExclusionTriple&, const ExclusionTriple&) = default;
  friend auto operator<=>(const ExclusionTriple&, const ExclusionTriple&) = default;
};

struct SearchLimits {
  std::uint64_t max_nodes = 10'000'000;
  double max_seconds = 60.0;
  bool memoize = false;
};

enum class OutcomeKind { Feasible, Infeasible, ResourceExceeded };

std::string_view to_string(OutcomeKind k);

struct SearchOutcome {
  OutcomeKind kind = OutcomeKind::Infeasible;
  std::optional<ElementSeq> witness;   // Feasible only
  std::vector<Value> certificate;      // gaps of the witness sumset in [0, b3]
  std::uint64_t nodes_explored = 0;
  std::size_t max_depth = 0;
};

// Decides whether some infinite A has P(A) = N \ B with B's three smallest
// elements exactly t.
//
// Each node is a strictly increasing prefix with S = P(prefix) capped at b3.
// f is the smallest value in [0, b3] missing from S other than b1, b2, b3. If
// there is none the prefix is a witness. Otherwise every valid A must cover f
// using elements <= f, so the next element v ranges over (last, f], and v is
// rejected when b - v is already in S for some pinned b.
//
// A witness extends to an infinite A by repeatedly appending max(sigma, b3) + 2:
// each step excludes max(sigma, b3) + 1 > b3 and touches nothing in [0, b3]. So
// Feasible is a proof of existence; Infeasible is only reported after the tree
// is exhausted, and hitting a limit yields ResourceExceeded.
//
// Branches are tried in ascending order, so the witness is the
// lexicographically smallest one.
SearchOutcome feasibility_search(const ExclusionTriple& t, const SearchLimits& limits = {});

struct CriticalResult {
  enum class Status { Found, NotFound, Inconclusive };
  Status status = Status::NotFound;
  std::optional<Value> b3;               // Found
  std::optional<Value> first_undecided;  // Inconclusive
  std::uint64_t nodes = 0;               // summed over all candidates tried
};

std::string_view to_string(CriticalResult::Status s);

using TripleDecider = std::function<SearchOutcome(const ExclusionTriple&)>;

// Smallest b3 in (b2, b3_max] that is Feasible, with every smaller candidate
// decided Infeasible.
CriticalResult critical_b3(Value b1, Value b2, Value b3_max, const SearchLimits& limits = {});

// Same scan with a caller-supplied decision procedure (e.g. a cache in front
// of feasibility_search).
CriticalResult critical_b3(Value b1, Value b2, Value b3_max, const TripleDecider& decide);

}  // namespace burr
