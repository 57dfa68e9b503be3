#include "burrset/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <string>
#include <unordered_set>

#include "burrset/error.hpp"

namespace burr {

void ExclusionTriple::validate() const {
  if (b1 < 2 || b1 >= b2 || b2 >= b3)
    throw UsageError("exclusion triple must satisfy 2 <= b1 < b2 < b3");
}

std::string_view to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::Feasible: return "feasible";
    case OutcomeKind::Infeasible: return "infeasible";
    case OutcomeKind::ResourceExceeded: return "resource_exceeded";
  }
  return "unknown";
}

std::string_view to_string(CriticalResult::Status s) {
  switch (s) {
    case CriticalResult::Status::Found: return "found";
    case CriticalResult::Status::NotFound: return "not_found";
    case CriticalResult::Status::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

struct LimitHit {};

class Searcher {
 public:
  Searcher(const ExclusionTriple& t, const SearchLimits& limits)
      : pinned_{t.b1, t.b2, t.b3},
        cap_(t.b3),
        nwords_(detail::word_count(t.b3)),
        limits_(limits),
        deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(limits.max_seconds))),
        pinned_mask_(nwords_, 0) {
    for (Value b : pinned_) detail::set_bit(pinned_mask_, b);
  }

  SearchOutcome run() {
    SearchOutcome out;
    std::vector<std::uint64_t> root(nwords_, 0);
    root[0] = 1;
    try {
      if (descend(root, 0, 0)) {
        out.kind = OutcomeKind::Feasible;
        out.witness = ElementSeq(prefix_);
      } else {
        out.kind = OutcomeKind::Infeasible;
      }
    } catch (const LimitHit&) {
      out.kind = OutcomeKind::ResourceExceeded;
    }
    out.nodes_explored = nodes_;
    out.max_depth = max_depth_;
    return out;
  }

 private:
  // Smallest value in [0, cap] that is neither in S nor pinned; cap + 1 if none.
  Value first_required(std::span<const std::uint64_t> s) const {
    for (std::size_t i = 0; i < nwords_; ++i) {
      const std::uint64_t missing = ~(s[i] | pinned_mask_[i]);
      if (missing != 0) {
        const Value x = i * 64 + static_cast<Value>(std::countr_zero(missing));
        return x <= cap_ ? x : cap_ + 1;
      }
    }
    return cap_ + 1;
  }

  bool hits_pinned(std::span<const std::uint64_t> s, Value v) const {
    for (Value b : pinned_)
      if (b >= v && detail::test_bit(s, b - v)) return true;
    return false;
  }

  std::string memo_key(std::span<const std::uint64_t> s, Value last) const {
    std::string key(reinterpret_cast<const char*>(s.data()), s.size_bytes());
    key.append(reinterpret_cast<const char*>(&last), sizeof last);
    return key;
  }

  bool descend(std::span<const std::uint64_t> s, Value last, std::size_t depth) {
    ++nodes_;
    if (nodes_ > limits_.max_nodes) throw LimitHit{};
    if ((nodes_ & 0x3ff) == 0 && Clock::now() > deadline_) throw LimitHit{};
    if (depth > cap_) throw InternalError("search depth exceeded b3");
    max_depth_ = std::max(max_depth_, depth);

    const Value f = first_required(s);
    if (f > cap_) return true;

    std::string key;
    if (limits_.memoize) {
      key = memo_key(s, last);
      if (dead_.contains(key)) return false;
    }

    std::vector<std::uint64_t> child(nwords_);
    for (Value v = last + 1; v <= f; ++v) {
      if (hits_pinned(s, v)) continue;
      std::copy(s.begin(), s.end(), child.begin());
      detail::shift_or(child, v, cap_);
      prefix_.push_back(v);
      if (descend(child, v, depth + 1)) return true;
      prefix_.pop_back();
    }

    if (limits_.memoize) dead_.insert(std::move(key));
    return false;
  }

  std::array<Value, 3> pinned_;
  Value cap_;
  std::size_t nwords_;
  SearchLimits limits_;
  Clock::time_point deadline_;
  std::vector<std::uint64_t> pinned_mask_;
  std::vector<Value> prefix_;
  std::uint64_t nodes_ = 0;
  std::size_t max_depth_ = 0;
  std::unordered_set<std::string> dead_;
};

}  // namespace

SearchOutcome feasibility_search(const ExclusionTriple& t, const SearchLimits& limits) {
  t.validate();
  if (limits.max_nodes == 0 || !(limits.max_seconds > 0))
    throw UsageError("search limits must be positive");
  // The search holds one capped sumset per depth; apply the usual ceiling.
  if (t.b3 > kDefaultMaxCap) throw ResourceError("b3 exceeds the sumset memory ceiling");

  SearchOutcome out = Searcher(t, limits).run();
  if (out.kind == OutcomeKind::Feasible) {
    const SumSet s = sumset_of(*out.witness, t.b3);
    out.certificate = gaps(s, t.b3);
    if (out.certificate != std::vector<Value>{t.b1, t.b2, t.b3})
      throw InternalError("search witness failed independent re-check");
  }
  return out;
}

CriticalResult critical_b3(Value b1, Value b2, Value b3_max, const TripleDecider& decide) {
  if (b1 < 2 || b2 <= b1 || b3_max <= b2)
    throw UsageError("critical_b3 requires 2 <= b1 < b2 < b3_max");
  CriticalResult r;
  for (Value b3 = b2 + 1; b3 <= b3_max; ++b3) {
    const SearchOutcome o = decide({b1, b2, b3});
    r.nodes += o.nodes_explored;
    if (o.kind == OutcomeKind::ResourceExceeded) {
      r.status = CriticalResult::Status::Inconclusive;
      r.first_undecided = b3;
      return r;
    }
    if (o.kind == OutcomeKind::Feasible) {
      r.status = CriticalResult::Status::Found;
      r.b3 = b3;
      return r;
    }
  }
  r.status = CriticalResult::Status::NotFound;
  return r;
}

CriticalResult critical_b3(Value b1, Value b2, Value b3_max, const SearchLimits& limits) {
  return critical_b3(b1, b2, b3_max, [&limits](const ExclusionTriple& t) {
    return feasibility_search(t, limits);
  });
}

}  // namespace burr
