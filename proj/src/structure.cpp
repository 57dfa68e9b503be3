#include "burrset/structure.hpp"

#include <algorithm>
#include <string>

#include "burrset/error.hpp"

namespace burr {

std::string_view to_string(ChainClause c) {
  switch (c) {
    case ChainClause::FirstIsOne: return "first_is_one";
    case ChainClause::SecondReachThree: return "second_reach_three";
    case ChainClause::Growth: return "growth";
    case ChainClause::ReachBelowB1: return "reach_below_b1";
    case ChainClause::SumsetInterval: return "sumset_interval";
  }
  return "unknown";
}

std::string_view to_string(HeadClause c) {
  switch (c) {
    case HeadClause::NextIsB1PlusOne: return "next_is_b1_plus_one";
    case HeadClause::SecondBound: return "second_bound";
    case HeadClause::ThirdBound: return "third_bound";
    case HeadClause::B2LowerBound: return "b2_lower_bound";
    case HeadClause::PrefixPattern: return "prefix_pattern";
  }
  return "unknown";
}

namespace {

std::size_t base_length(const ElementSeq& seq, Value b1) {
  if (b1 < 2) throw UsageError("b1 must be at least 2");
  if (seq.empty()) throw UsageError("sequence is empty");
  if (seq.contains(b1)) throw UsageError("b1 = " + std::to_string(b1) + " is an element");
  const auto it = std::lower_bound(seq.begin(), seq.end(), b1);
  const auto k = static_cast<std::size_t>(it - seq.begin());
  if (k == 0) throw UsageError("no element is below b1");
  return k;
}

bool is_interval(const SumSet& s, Value hi) {
  return gaps(s, hi).empty() && s.sigma() == hi;
}

}  // namespace

Lemma21Report verify_lemma21(const ElementSeq& seq, Value b1) {
  Lemma21Report r;
  r.k = base_length(seq, b1);

  Value c = 0;
  for (std::size_t i = 0; i < r.k; ++i) {
    if (i > 0 && seq[i] > r.chain.back() + 1)
      r.violations.push_back({i, ChainClause::Growth});
    c += seq[i];
    r.chain.push_back(c);
  }
  if (r.chain[0] != 1) r.violations.push_back({1, ChainClause::FirstIsOne});
  if (r.k >= 2 && r.chain[1] != 3) r.violations.push_back({2, ChainClause::SecondReachThree});
  if (r.chain.back() != b1 - 1) r.violations.push_back({r.k, ChainClause::ReachBelowB1});

  SumSet s(r.chain.back());
  for (std::size_t i = 0; i < r.k; ++i) {
    s.insert(seq[i]);
    if (!is_interval(s, r.chain[i]))
      r.violations.push_back({i + 1, ChainClause::SumsetInterval});
  }

  std::stable_sort(r.violations.begin(), r.violations.end(),
                   [](const ChainViolation& x, const ChainViolation& y) {
                     return x.index < y.index;
                   });
  r.pass = r.violations.empty();
  return r;
}

Lemma22Report verify_lemma22(const ElementSeq& seq, Value b1, Value b2) {
  if (b1 < 2) throw UsageError("b1 must be at least 2");
  if (b2 < 3 * b1 + 5) throw UsageError("requires b2 >= 3*b1 + 5");
  Lemma22Report r;
  r.k = base_length(seq, b1);
  if (seq.size() < r.k + 3)
    throw UsageError("need at least k+3 = " + std::to_string(r.k + 3) + " elements");
  r.a_k1 = seq[r.k];
  r.a_k2 = seq[r.k + 1];
  r.a_k3 = seq[r.k + 2];

  const Value top = r.a_k3 + r.a_k2 + 2 * b1;
  const Value hole = r.a_k3 + r.a_k2 + b1;
  const ElementSeq prefix(std::vector<Value>(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(r.k + 3)));
  const SumSet s = sumset_of(prefix, top + 1);
  const bool pattern = s.sigma() == top && gaps(s, top) == std::vector<Value>{b1, hole};

  r.clause_results = {
      {HeadClause::NextIsB1PlusOne, r.a_k1 == b1 + 1},
      {HeadClause::SecondBound, r.a_k2 <= 2 * b1 + 1},
      {HeadClause::ThirdBound, r.a_k3 <= r.a_k2 + b1},
      {HeadClause::B2LowerBound, b2 >= hole},
      {HeadClause::PrefixPattern, pattern},
  };
  r.pass = std::all_of(r.clause_results.begin(), r.clause_results.end(),
                       [](const ClauseResult& c) { return c.pass; });
  return r;
}

std::vector<Value> first_gaps(const SumSet& s, Value limit, std::size_t count) {
  if (count == 0) throw UsageError("count must be at least 1");
  auto g = gaps(s, limit);
  if (g.size() > count) g.resize(count);
  return g;
}

}  // namespace burr
