#include "burrset/burrset.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "burrset/construct.hpp"
#include "burrset/error.hpp"
#include "burrset/search.hpp"
#include "burrset/structure.hpp"
#include "burrset/sumset.hpp"

struct burr_list {
  std::vector<std::uint64_t> values;
};

struct burr_sumset {
  burr::SumSet impl;
};

struct burr_lemma21 {
  burr::Lemma21Report impl;
};

struct burr_lemma22 {
  burr::Lemma22Report impl;
};

struct burr_plan {
  burr::ConstructionPlan impl;
};

struct burr_search_result {
  burr::SearchOutcome impl;
};

static_assert(static_cast<int>(burr::ChainClause::SumsetInterval) == BURR_CHAIN_SUMSET_INTERVAL);
static_assert(static_cast<int>(burr::HeadClause::PrefixPattern) == BURR_HEAD_PREFIX_PATTERN);
static_assert(burr::kHeadClauseCount == BURR_HEAD_CLAUSE_COUNT);
static_assert(static_cast<int>(burr::CaseId::RangeHighSpecial) == BURR_CASE_RANGE_HIGH_SPECIAL);
static_assert(static_cast<int>(burr::OutcomeKind::ResourceExceeded) == BURR_RESOURCE_EXCEEDED);
static_assert(static_cast<int>(burr::CriticalResult::Status::Inconclusive) ==
              BURR_CRITICAL_INCONCLUSIVE);

namespace {

thread_local std::string g_last_error;

burr_status to_status(burr::ErrorCode c) {
  switch (c) {
    case burr::ErrorCode::Usage: return BURR_E_USAGE;
    case burr::ErrorCode::Resource: return BURR_E_RESOURCE;
    case burr::ErrorCode::InfeasibleBase: return BURR_E_INFEASIBLE_BASE;
    case burr::ErrorCode::UnsupportedB1: return BURR_E_UNSUPPORTED_B1;
    case burr::ErrorCode::OutOfRange: return BURR_E_OUT_OF_RANGE;
    case burr::ErrorCode::Internal: return BURR_E_INTERNAL;
  }
  return BURR_E_INTERNAL;
}

burr_status fail(burr_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
burr_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const burr::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(BURR_E_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(BURR_E_INTERNAL, e.what());
  }
}

burr::ElementSeq make_seq(const uint64_t* elems, size_t n) {
  if (n != 0 && elems == nullptr) throw burr::UsageError("null element array");
  return burr::ElementSeq(std::vector<burr::Value>(elems, elems + n));
}

burr_list* make_list(std::vector<std::uint64_t> v) {
  return new burr_list{std::move(v)};
}

burr::SearchLimits make_limits(const burr_limits* l) {
  burr::SearchLimits out;
  if (l != nullptr) {
    out.max_nodes = l->max_nodes;
    out.max_seconds = l->max_seconds;
    out.memoize = l->memoize != 0;
  }
  return out;
}

#define BURR_REQUIRE(cond)                                            \
  do {                                                                \
    if (!(cond)) return fail(BURR_E_NULL_ARG, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* burr_version(void) { return "1.0.0"; }

const char* burr_status_name(burr_status s) {
  switch (s) {
    case BURR_OK: return "ok";
    case BURR_E_USAGE: return "usage";
    case BURR_E_RESOURCE: return "resource";
    case BURR_E_INFEASIBLE_BASE: return "infeasible_base";
    case BURR_E_UNSUPPORTED_B1: return "unsupported_b1";
    case BURR_E_OUT_OF_RANGE: return "out_of_range";
    case BURR_E_INTERNAL: return "internal";
    case BURR_E_OVERFLOW: return "overflow";
    case BURR_E_NULL_ARG: return "null_arg";
  }
  return "unknown";
}

const char* burr_last_error(void) { return g_last_error.c_str(); }

size_t burr_list_size(const burr_list* l) { return l ? l->values.size() : 0; }
const uint64_t* burr_list_data(const burr_list* l) { return l ? l->values.data() : nullptr; }
void burr_list_destroy(burr_list* l) { delete l; }

burr_status burr_sumset_of(const uint64_t* elems, size_t n, uint64_t cap, uint64_t max_cap,
                           burr_sumset** out) {
  BURR_REQUIRE(out);
  return guarded([&] {
    const auto seq = make_seq(elems, n);
    *out = new burr_sumset{
        burr::sumset_of(seq, cap, max_cap == 0 ? burr::kDefaultMaxCap : max_cap)};
    return BURR_OK;
  });
}

burr_status burr_sumset_add(const burr_sumset* s, uint64_t a, burr_sumset** out) {
  BURR_REQUIRE(s && out);
  return guarded([&] {
    *out = new burr_sumset{burr::add_element(s->impl, a)};
    return BURR_OK;
  });
}

int burr_sumset_contains(const burr_sumset* s, uint64_t x) {
  return s != nullptr && s->impl.contains(x);
}

uint64_t burr_sumset_cap(const burr_sumset* s) { return s ? s->impl.cap() : 0; }

uint64_t burr_sumset_count(const burr_sumset* s) { return s ? s->impl.count() : 0; }

burr_status burr_sumset_sigma(const burr_sumset* s, uint64_t* out) {
  BURR_REQUIRE(s && out);
  const burr::Sigma sigma = s->impl.sigma();
  if (sigma > UINT64_MAX) return fail(BURR_E_OVERFLOW, "sigma exceeds 64 bits");
  *out = static_cast<uint64_t>(sigma);
  return BURR_OK;
}

size_t burr_sumset_sigma_decimal(const burr_sumset* s, char* buf, size_t len) {
  if (s == nullptr) return 0;
  const std::string text = burr::to_string(s->impl.sigma());
  if (buf != nullptr && len > 0) {
    const size_t n = std::min(len - 1, text.size());
    std::memcpy(buf, text.data(), n);
    buf[n] = '\0';
  }
  return text.size();
}

burr_status burr_sumset_gaps(const burr_sumset* s, uint64_t upto, burr_list** out) {
  BURR_REQUIRE(s && out);
  return guarded([&] {
    *out = make_list(burr::gaps(s->impl, upto));
    return BURR_OK;
  });
}

burr_status burr_sumset_first_gaps(const burr_sumset* s, uint64_t limit, size_t count,
                                   burr_list** out) {
  BURR_REQUIRE(s && out);
  return guarded([&] {
    *out = make_list(burr::first_gaps(s->impl, limit, count));
    return BURR_OK;
  });
}

void burr_sumset_destroy(burr_sumset* s) { delete s; }

burr_status burr_brute_force_sumset(const uint64_t* elems, size_t n, burr_list** out) {
  BURR_REQUIRE(out);
  return guarded([&] {
    const auto sums = burr::brute_force_sumset(make_seq(elems, n));
    std::vector<std::uint64_t> v;
    v.reserve(sums.size());
    for (burr::Sigma x : sums) {
      if (x > UINT64_MAX) return fail(BURR_E_OVERFLOW, "subset sum exceeds 64 bits");
      v.push_back(static_cast<std::uint64_t>(x));
    }
    *out = make_list(std::move(v));
    return BURR_OK;
  });
}

const char* burr_chain_clause_name(burr_chain_clause c) {
  return burr::to_string(static_cast<burr::ChainClause>(c)).data();
}

const char* burr_head_clause_name(burr_head_clause c) {
  return burr::to_string(static_cast<burr::HeadClause>(c)).data();
}

burr_status burr_verify_lemma21(const uint64_t* elems, size_t n, uint64_t b1,
                                burr_lemma21** out) {
  BURR_REQUIRE(out);
  return guarded([&] {
    *out = new burr_lemma21{burr::verify_lemma21(make_seq(elems, n), b1)};
    return BURR_OK;
  });
}

size_t burr_lemma21_k(const burr_lemma21* r) { return r ? r->impl.k : 0; }
int burr_lemma21_pass(const burr_lemma21* r) { return r != nullptr && r->impl.pass; }

burr_status burr_lemma21_chain(const burr_lemma21* r, burr_list** out) {
  BURR_REQUIRE(r && out);
  return guarded([&] {
    *out = make_list(r->impl.chain);
    return BURR_OK;
  });
}

size_t burr_lemma21_violation_count(const burr_lemma21* r) {
  return r ? r->impl.violations.size() : 0;
}

burr_status burr_lemma21_violation(const burr_lemma21* r, size_t i, size_t* index,
                                   burr_chain_clause* clause) {
  BURR_REQUIRE(r && index && clause);
  if (i >= r->impl.violations.size()) return fail(BURR_E_USAGE, "violation index out of range");
  *index = r->impl.violations[i].index;
  *clause = static_cast<burr_chain_clause>(r->impl.violations[i].clause);
  return BURR_OK;
}

void burr_lemma21_destroy(burr_lemma21* r) { delete r; }

burr_status burr_verify_lemma22(const uint64_t* elems, size_t n, uint64_t b1, uint64_t b2,
                                burr_lemma22** out) {
  BURR_REQUIRE(out);
  return guarded([&] {
    *out = new burr_lemma22{burr::verify_lemma22(make_seq(elems, n), b1, b2)};
    return BURR_OK;
  });
}

size_t burr_lemma22_k(const burr_lemma22* r) { return r ? r->impl.k : 0; }

void burr_lemma22_head(const burr_lemma22* r, uint64_t out[3]) {
  if (r == nullptr || out == nullptr) return;
  out[0] = r->impl.a_k1;
  out[1] = r->impl.a_k2;
  out[2] = r->impl.a_k3;
}

int burr_lemma22_clause(const burr_lemma22* r, burr_head_clause c) {
  if (r == nullptr) return 0;
  for (const auto& cr : r->impl.clause_results)
    if (cr.clause == static_cast<burr::HeadClause>(c)) return cr.pass;
  return 0;
}

int burr_lemma22_pass(const burr_lemma22* r) { return r != nullptr && r->impl.pass; }
void burr_lemma22_destroy(burr_lemma22* r) { delete r; }

const char* burr_case_name(burr_case c) {
  return burr::to_string(static_cast<burr::CaseId>(c)).data();
}

burr_status burr_base_segment(uint64_t b1, burr_list** out) {
  BURR_REQUIRE(out);
  return guarded([&] {
    auto base = burr::base_segment(b1);
    if (!base)
      return fail(BURR_E_INFEASIBLE_BASE,
                  "no base segment exists for b1 = " + std::to_string(b1));
    *out = make_list(base->elements());
    return BURR_OK;
  });
}

burr_status burr_plan_create(uint64_t b1, uint64_t b2, burr_plan** out) {
  BURR_REQUIRE(out);
  return guarded([&] {
    *out = new burr_plan{burr::plan_construction(b1, b2)};
    return BURR_OK;
  });
}

burr_case burr_plan_case(const burr_plan* p) {
  return p ? static_cast<burr_case>(p->impl.case_id) : BURR_CASE_RANGE_LOW;
}

uint64_t burr_plan_m(const burr_plan* p) { return p ? p->impl.m : 0; }

int burr_plan_jl(const burr_plan* p, uint64_t* j, uint64_t* l) {
  if (p == nullptr || !p->impl.j || !p->impl.l) return 0;
  if (j) *j = *p->impl.j;
  if (l) *l = *p->impl.l;
  return 1;
}

uint64_t burr_plan_min_horizon(const burr_plan* p) { return p ? p->impl.min_horizon() : 0; }

const char* burr_plan_tail_rule(const burr_plan*) {
  return burr::ConstructionPlan::tail_rule.data();
}

burr_status burr_plan_head(const burr_plan* p, burr_list** out) {
  BURR_REQUIRE(p && out);
  return guarded([&] {
    *out = make_list(p->impl.head);
    return BURR_OK;
  });
}

burr_status burr_realize(const burr_plan* p, uint64_t horizon, burr_list** out) {
  BURR_REQUIRE(p && out);
  return guarded([&] {
    *out = make_list(burr::realize(p->impl, horizon).elements());
    return BURR_OK;
  });
}

burr_status burr_realize_head(const burr_plan* p, burr_list** out) {
  BURR_REQUIRE(p && out);
  return guarded([&] {
    *out = make_list(burr::realize_head(p->impl).elements());
    return BURR_OK;
  });
}

void burr_plan_destroy(burr_plan* p) { delete p; }

burr_status burr_derive_b(const uint64_t* elems, size_t n, uint64_t horizon, uint64_t max_cap,
                          burr_list** out) {
  BURR_REQUIRE(out);
  return guarded([&] {
    auto report = burr::derive_B(make_seq(elems, n), horizon, false,
                                 max_cap == 0 ? burr::kDefaultMaxCap : max_cap);
    *out = make_list(std::move(report.exclusions));
    return BURR_OK;
  });
}

burr_limits burr_limits_default(void) {
  const burr::SearchLimits d;
  return burr_limits{d.max_nodes, d.max_seconds, d.memoize ? 1 : 0};
}

const char* burr_outcome_name(burr_outcome o) {
  return burr::to_string(static_cast<burr::OutcomeKind>(o)).data();
}

burr_status burr_search(uint64_t b1, uint64_t b2, uint64_t b3, const burr_limits* limits,
                        burr_search_result** out) {
  BURR_REQUIRE(out);
  return guarded([&] {
    *out = new burr_search_result{
        burr::feasibility_search({b1, b2, b3}, make_limits(limits))};
    return BURR_OK;
  });
}

burr_outcome burr_search_outcome(const burr_search_result* r) {
  return r ? static_cast<burr_outcome>(r->impl.kind) : BURR_RESOURCE_EXCEEDED;
}

uint64_t burr_search_nodes(const burr_search_result* r) {
  return r ? r->impl.nodes_explored : 0;
}

uint64_t burr_search_max_depth(const burr_search_result* r) {
  return r ? r->impl.max_depth : 0;
}

burr_status burr_search_witness(const burr_search_result* r, burr_list** out) {
  BURR_REQUIRE(r && out);
  return guarded([&] {
    *out = make_list(r->impl.witness ? r->impl.witness->elements()
                                     : std::vector<std::uint64_t>{});
    return BURR_OK;
  });
}

burr_status burr_search_certificate(const burr_search_result* r, burr_list** out) {
  BURR_REQUIRE(r && out);
  return guarded([&] {
    *out = make_list(r->impl.certificate);
    return BURR_OK;
  });
}

void burr_search_result_destroy(burr_search_result* r) { delete r; }

const char* burr_critical_status_name(burr_critical_status s) {
  return burr::to_string(static_cast<burr::CriticalResult::Status>(s)).data();
}

burr_status burr_critical_b3(uint64_t b1, uint64_t b2, uint64_t b3_max,
                             const burr_limits* limits, burr_critical* out) {
  BURR_REQUIRE(out);
  return guarded([&] {
    const auto r = burr::critical_b3(b1, b2, b3_max, make_limits(limits));
    out->status = static_cast<burr_critical_status>(r.status);
    out->b3 = r.b3.value_or(0);
    out->first_undecided = r.first_undecided.value_or(0);
    out->nodes = r.nodes;
    return BURR_OK;
  });
}

}  // extern "C"
