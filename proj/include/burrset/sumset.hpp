#pragma once

#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace burr {

using Value = std::uint64_t;

// Exact running total of inserted elements. 128 bits cannot overflow for any
// realistic number of 64-bit elements.
using Sigma = unsigned __int128;

std::string to_string(Sigma s);

// Default ceiling on SumSet::cap (values, not bytes): 2^24.
inline constexpr Value kDefaultMaxCap = Value{1} << 24;

// A finite prefix of A: strictly increasing positive integers.
class ElementSeq {
 public:
  ElementSeq() = default;
  // Throws UsageError unless the input is strictly increasing and positive.
  explicit ElementSeq(std::vector<Value> elements);
  ElementSeq(std::initializer_list<Value> elements)
      : ElementSeq(std::vector<Value>(elements)) {}

  const std::vector<Value>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  Value operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  Sigma sum() const noexcept;
  bool contains(Value v) const noexcept;

  // Returns a new sequence with v appended; v must exceed the last element.
  ElementSeq appended(Value v) const;

  friend bool operator==(const ElementSeq&, const ElementSeq&) = default;

 private:
  std::vector<Value> elements_;
};

// Membership bit vector for P(A) truncated to [0, cap], plus the exact sum.
class SumSet {
 public:
  // The empty-sum set {0}. Throws ResourceError if cap > max_cap.
  explicit SumSet(Value cap, Value max_cap = kDefaultMaxCap);

  Value cap() const noexcept { return cap_; }
  Sigma sigma() const noexcept { return sigma_; }
  bool contains(Value x) const noexcept;
  std::size_t count() const noexcept;

  // In-place P <- P ∪ (a + P), truncated at cap. Requires a >= 1.
  void insert(Value a);

  // Words of the bit vector, bit x of the concatenation = membership of x.
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const SumSet&, const SumSet&) = default;

 private:
  Value cap_;
  Sigma sigma_ = 0;
  std::vector<std::uint64_t> words_;
};

SumSet sumset_of(const ElementSeq& seq, Value cap, Value max_cap = kDefaultMaxCap);

SumSet add_element(const SumSet& s, Value a);

// Non-members of s in [0, upto], ascending. Throws UsageError if upto > cap.
std::vector<Value> gaps(const SumSet& s, Value upto);

// Enumerates all 2^n subsets; n <= 20. Test oracle only.
inline constexpr std::size_t kBruteForceMaxElements = 20;
std::set<Sigma> brute_force_sumset(const ElementSeq& seq);

namespace detail {

inline std::size_t word_count(Value cap) {
  return static_cast<std::size_t>(cap / 64 + 1);
}

// bits |= bits << shift, then clears everything above cap.
void shift_or(std::span<std::uint64_t> bits, Value shift, Value cap) noexcept;

void mask_above(std::span<std::uint64_t> bits, Value cap) noexcept;

inline bool test_bit(std::span<const std::uint64_t> bits, Value x) noexcept {
  return (bits[x / 64] >> (x % 64)) & 1U;
}

inline void set_bit(std::span<std::uint64_t> bits, Value x) noexcept {
  bits[x / 64] |= std::uint64_t{1} << (x % 64);
}

}  // namespace detail

}  // namespace burr
