#pragma once

// Thin RAII layer over the burrset C API for the command-line tool.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "burrset/burrset.h"

namespace burrcli {

// Carries the process exit code the failure maps to.
class CliError : public std::runtime_error {
 public:
  CliError(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitMismatch = 4;

inline int exit_code_for(burr_status s) {
  switch (s) {
    case BURR_OK: return kExitOk;
    case BURR_E_RESOURCE:
    case BURR_E_OVERFLOW: return kExitResource;
    case BURR_E_INTERNAL: return kExitMismatch;
    default: return kExitUsage;
  }
}

inline void check(burr_status s) {
  if (s != BURR_OK)
    throw CliError(exit_code_for(s), std::string(burr_status_name(s)) + ": " + burr_last_error());
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const noexcept { Destroy(p); }
};

using ListPtr = std::unique_ptr<burr_list, Deleter<burr_list, burr_list_destroy>>;
using SumsetPtr = std::unique_ptr<burr_sumset, Deleter<burr_sumset, burr_sumset_destroy>>;
using PlanPtr = std::unique_ptr<burr_plan, Deleter<burr_plan, burr_plan_destroy>>;
using Lemma21Ptr = std::unique_ptr<burr_lemma21, Deleter<burr_lemma21, burr_lemma21_destroy>>;
using Lemma22Ptr = std::unique_ptr<burr_lemma22, Deleter<burr_lemma22, burr_lemma22_destroy>>;
using SearchPtr =
    std::unique_ptr<burr_search_result, Deleter<burr_search_result, burr_search_result_destroy>>;

inline std::vector<std::uint64_t> to_vector(const burr_list* l) {
  const std::uint64_t* d = burr_list_data(l);
  return {d, d + burr_list_size(l)};
}

// Calls fn(burr_list**) and returns the list contents.
template <class Fn>
std::vector<std::uint64_t> take_list(Fn&& fn) {
  burr_list* raw = nullptr;
  check(fn(&raw));
  ListPtr owned(raw);
  return to_vector(owned.get());
}

}  // namespace burrcli
