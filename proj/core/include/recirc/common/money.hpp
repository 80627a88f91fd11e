#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace recirc {

// All currency amounts are integer micro-dollars (1 $ = 1'000'000 micros).
// Schedules and splits are computed in integer arithmetic with explicit
// rounding and residue assignment, so conservation checks can assert exact
// equality instead of comparing within an epsilon.

int64_t div_half_even(__int128 numerator, int64_t denominator);
int64_t mul_div_half_even(int64_t a, int64_t b, int64_t denominator);
int64_t mul_div_floor(int64_t a, int64_t b, int64_t denominator);
int64_t mul_div_ceil(int64_t a, int64_t b, int64_t denominator);

class Money {
 public:
  constexpr Money() : micros_(0) {}
  static constexpr Money from_micros(int64_t m) { return Money(m); }
  static Money from_dollars(double dollars);

  constexpr int64_t micros() const { return micros_; }
  double dollars() const { return static_cast<double>(micros_) / 1e6; }

  // "1234.567890"; always six fractional digits.
  std::string str() const;

  constexpr Money operator+(Money o) const { return Money(micros_ + o.micros_); }
  constexpr Money operator-(Money o) const { return Money(micros_ - o.micros_); }
  constexpr Money operator-() const { return Money(-micros_); }
  Money& operator+=(Money o) { micros_ += o.micros_; return *this; }
  Money& operator-=(Money o) { micros_ -= o.micros_; return *this; }
  auto operator<=>(const Money&) const = default;

  constexpr Money scaled(int64_t factor) const { return Money(micros_ * factor); }
  Money div_parts_half_even(int64_t parts) const {
    return Money(div_half_even(micros_, parts));
  }

 private:
  explicit constexpr Money(int64_t m) : micros_(m) {}
  int64_t micros_;
};

inline Money max(Money a, Money b) { return a < b ? b : a; }
inline Money min(Money a, Money b) { return a < b ? a : b; }

// Formats an arbitrary micro-valued quantity (money, tokens, coins).
std::string format_micros(int64_t micros);
// Parses "12.345678" (up to six fractional digits) into micros.
bool parse_micros(const std::string& text, int64_t& out);

}  // namespace recirc
