#include "burrset/sumset.hpp"

#include <algorithm>
#include <bit>

#include "burrset/error.hpp"

namespace burr {

std::string to_string(Sigma s) {
  if (s == 0) return "0";
  std::string out;
  while (s != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(s % 10)));
    s /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

ElementSeq::ElementSeq(std::vector<Value> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == 0) throw UsageError("elements must be positive");
    if (i > 0 && elements_[i] <= elements_[i - 1])
      throw UsageError("elements must be strictly increasing");
  }
}

Sigma ElementSeq::sum() const noexcept {
  Sigma s = 0;
  for (Value v : elements_) s += v;
  return s;
}

bool ElementSeq::contains(Value v) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

ElementSeq ElementSeq::appended(Value v) const {
  if (v == 0 || (!elements_.empty() && v <= elements_.back()))
    throw UsageError("appended element must exceed the last element");
  ElementSeq out = *this;
  out.elements_.push_back(v);
  return out;
}

namespace detail {

void mask_above(std::span<std::uint64_t> bits, Value cap) noexcept {
  const std::size_t last = static_cast<std::size_t>(cap / 64);
  const unsigned keep = static_cast<unsigned>(cap % 64) + 1;
  if (last < bits.size() && keep < 64) bits[last] &= (std::uint64_t{1} << keep) - 1;
  for (std::size_t i = last + 1; i < bits.size(); ++i) bits[i] = 0;
}

void shift_or(std::span<std::uint64_t> bits, Value shift, Value cap) noexcept {
  if (shift > cap) return;
  const std::size_t n = bits.size();
  const std::size_t ws = static_cast<std::size_t>(shift / 64);
  const unsigned bs = static_cast<unsigned>(shift % 64);
  // Walk downward so every source word (index <= i) is still unmodified.
  for (std::size_t i = n; i-- > ws;) {
    std::uint64_t w = bits[i - ws] << bs;
    if (bs != 0 && i - ws >= 1) w |= bits[i - ws - 1] >> (64 - bs);
    bits[i] |= w;
  }
  mask_above(bits, cap);
}

}  // namespace detail

SumSet::SumSet(Value cap, Value max_cap) : cap_(cap) {
  if (cap > max_cap)
    throw ResourceError("sumset cap " + std::to_string(cap) +
                        " exceeds memory ceiling " + std::to_string(max_cap));
  words_.assign(detail::word_count(cap), 0);
  words_[0] = 1;
}

bool SumSet::contains(Value x) const noexcept {
  return x <= cap_ && detail::test_bit(words_, x);
}

std::size_t SumSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

void SumSet::insert(Value a) {
  if (a == 0) throw UsageError("elements must be positive");
  detail::shift_or(words_, a, cap_);
  sigma_ += a;
}

SumSet sumset_of(const ElementSeq& seq, Value cap, Value max_cap) {
  SumSet s(cap, max_cap);
  for (Value a : seq) s.insert(a);
  return s;
}

SumSet add_element(const SumSet& s, Value a) {
  SumSet out = s;
  out.insert(a);
  return out;
}

std::vector<Value> gaps(const SumSet& s, Value upto) {
  if (upto > s.cap())
    throw UsageError("gap window " + std::to_string(upto) + " exceeds cap " +
                     std::to_string(s.cap()));
  std::vector<Value> out;
  const auto words = s.words();
  for (std::size_t i = 0; i <= upto / 64; ++i) {
    std::uint64_t missing = ~words[i];
    while (missing != 0) {
      const Value x = i * 64 + static_cast<Value>(std::countr_zero(missing));
      if (x > upto) break;
      out.push_back(x);
      missing &= missing - 1;
    }
  }
  return out;
}

std::set<Sigma> brute_force_sumset(const ElementSeq& seq) {
  if (seq.size() > kBruteForceMaxElements)
    throw UsageError("brute-force oracle accepts at most " +
                     std::to_string(kBruteForceMaxElements) + " elements");
  std::set<Sigma> out;
  const std::uint32_t subsets = std::uint32_t{1} << seq.size();
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    Sigma total = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (mask & (std::uint32_t{1} << i)) total += seq[i];
    out.insert(total);
  }
  return out;
}

}  // namespace burr
