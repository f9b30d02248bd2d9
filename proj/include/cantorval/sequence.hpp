#ifndef CANTORVAL_SEQUENCE_HPP
#define CANTORVAL_SEQUENCE_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cantorval/errors.hpp"

namespace cantorval {

/// An eventually periodic sequence a_1, a_2, ... given by a finite prefix
/// followed by a nonempty period repeated forever. Indices are 1-based.
template <class T>
class EventuallyPeriodic {
 public:
  EventuallyPeriodic(std::vector<T> prefix, std::vector<T> period)
      : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (period_.empty()) throw ParseError("eventually periodic sequence needs a nonempty period");
  }

  const T& at(std::size_t n) const {
    if (n == 0) throw DomainError("sequence index is 1-based");
    if (n <= prefix_.size()) return prefix_[n - 1];
    return period_[(n - prefix_.size() - 1) % period_.size()];
  }

  const std::vector<T>& prefix() const { return prefix_; }
  const std::vector<T>& period() const { return period_; }

  /// Shortest period, then shortest prefix. Two sequences are equal iff
  /// their canonical forms are identical.
  EventuallyPeriodic canonical() const {
    std::vector<T> period = period_;
    const std::size_t len = period.size();
    for (std::size_t p = 1; p < len; ++p) {
      if (len % p != 0) continue;
      bool repeats = true;
      for (std::size_t i = p; i < len && repeats; ++i) repeats = period[i] == period[i - p];
      if (repeats) {
        period.resize(p);
        break;
      }
    }
    std::vector<T> prefix = prefix_;
    while (!prefix.empty() && prefix.back() == period.back()) {
      prefix.pop_back();
      std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    }
    return EventuallyPeriodic(std::move(prefix), std::move(period));
  }

  friend bool operator==(const EventuallyPeriodic& a, const EventuallyPeriodic& b) {
    const auto ca = a.canonical();
    const auto cb = b.canonical();
    return ca.prefix_ == cb.prefix_ && ca.period_ == cb.period_;
  }

 private:
  std::vector<T> prefix_;
  std::vector<T> period_;
};

/// A word over {0, ..., Base-1}. Position r of the word (1-based, as in
/// I_t / J_s addressing) is digit(r); operator[] is 0-based.
template <unsigned Base>
class DigitCode {
  static_assert(Base >= 2 && Base <= 10);

 public:
  DigitCode() = default;
  explicit DigitCode(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
    for (auto d : digits_)
      if (d >= Base) throw ParseError("digit out of range for base " + std::to_string(Base));
  }

  static DigitCode parse(std::string_view text) {
    std::vector<std::uint8_t> digits;
    digits.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c >= static_cast<char>('0' + Base))
        throw ParseError("invalid code \"" + std::string(text) + "\"");
      digits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return DigitCode(std::move(digits));
  }

  static DigitCode repeated(std::uint8_t digit, std::size_t count) {
    return DigitCode(std::vector<std::uint8_t>(count, digit));
  }

  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return digits_[i]; }
  std::uint8_t digit(std::size_t r) const { return digits_.at(r - 1); }
  std::span<const std::uint8_t> digits() const { return digits_; }

  DigitCode& append(std::uint8_t digit, std::size_t count = 1) {
    if (digit >= Base) throw ParseError("digit out of range for base " + std::to_string(Base));
    digits_.insert(digits_.end(), count, digit);
    return *this;
  }

  DigitCode extended(std::uint8_t digit, std::size_t count = 1) const {
    DigitCode out = *this;
    out.append(digit, count);
    return out;
  }

  /// First n digits (t|n).
  DigitCode truncated(std::size_t n) const {
    return DigitCode(std::vector<std::uint8_t>(digits_.begin(), digits_.begin() + std::min(n, size())));
  }

  bool is_prefix_of(const DigitCode& other) const {
    return size() <= other.size() && std::equal(digits_.begin(), digits_.end(), other.digits_.begin());
  }

  std::string str() const {
    std::string out;
    out.reserve(size());
    for (auto d : digits_) out.push_back(static_cast<char>('0' + d));
    return out;
  }

  friend auto operator<=>(const DigitCode&, const DigitCode&) = default;
  friend bool operator==(const DigitCode&, const DigitCode&) = default;

 private:
  std::vector<std::uint8_t> digits_;
};

using BinaryCode = DigitCode<2>;
using TernaryCode = DigitCode<3>;

/// Largest 1-based position holding a nonzero digit; 0 if none.
inline std::size_t last_nonzero_position(const TernaryCode& s) {
  for (std::size_t r = s.size(); r > 0; --r)
    if (s.digit(r) > 0) return r;
  return 0;
}

/// Largest 1-based position holding a digit below 2; 0 if none.
inline std::size_t last_non_two_position(const TernaryCode& s) {
  for (std::size_t r = s.size(); r > 0; --r)
    if (s.digit(r) < 2) return r;
  return 0;
}

/// Calls visit(code) for every code of the given length, in lexicographic order.
template <unsigned Base, class Visit>
void for_each_code(std::size_t length, Visit&& visit) {
  std::vector<std::uint8_t> digits(length, 0);
  while (true) {
    visit(DigitCode<Base>(digits));
    std::size_t i = length;
    while (i > 0 && digits[i - 1] == Base - 1) digits[--i] = 0;
    if (i == 0) return;
    ++digits[i - 1];
  }
}

}  // namespace cantorval

#endif  // CANTORVAL_SEQUENCE_HPP
