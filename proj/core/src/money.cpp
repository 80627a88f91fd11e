#include "recirc/common/money.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace recirc {

int64_t div_half_even(__int128 numerator, int64_t denominator) {
  if (denominator <= 0) throw std::invalid_argument("div_half_even: denominator must be positive");
  __int128 q = numerator / denominator;
  __int128 r = numerator % denominator;
  if (r == 0) return static_cast<int64_t>(q);
  __int128 absr = r < 0 ? -r : r;
  int sign = numerator < 0 ? -1 : 1;
  __int128 twice = absr * 2;
  if (twice > denominator) {
    q += sign;
  } else if (twice == denominator) {
    if ((q & 1) != 0) q += sign;  // ties to even
  }
  return static_cast<int64_t>(q);
}

int64_t mul_div_half_even(int64_t a, int64_t b, int64_t denominator) {
  return div_half_even(static_cast<__int128>(a) * b, denominator);
}

int64_t mul_div_floor(int64_t a, int64_t b, int64_t denominator) {
  if (denominator <= 0) throw std::invalid_argument("mul_div_floor: denominator must be positive");
  __int128 num = static_cast<__int128>(a) * b;
  __int128 q = num / denominator;
  if (num % denominator != 0 && num < 0) q -= 1;
  return static_cast<int64_t>(q);
}

int64_t mul_div_ceil(int64_t a, int64_t b, int64_t denominator) {
  if (denominator <= 0) throw std::invalid_argument("mul_div_ceil: denominator must be positive");
  __int128 num = static_cast<__int128>(a) * b;
  __int128 q = num / denominator;
  if (num % denominator != 0 && num > 0) q += 1;
  return static_cast<int64_t>(q);
}

Money Money::from_dollars(double dollars) {
  return Money::from_micros(std::llround(dollars * 1e6));
}

std::string Money::str() const { return format_micros(micros_); }

std::string format_micros(int64_t micros) {
  bool neg = micros < 0;
  uint64_t v = neg ? static_cast<uint64_t>(-(micros + 1)) + 1 : static_cast<uint64_t>(micros);
  uint64_t whole = v / 1000000;
  uint64_t frac = v % 1000000;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%s%llu.%06llu", neg ? "-" : "",
                static_cast<unsigned long long>(whole),
                static_cast<unsigned long long>(frac));
  return buf;
}

bool parse_micros(const std::string& text, int64_t& out) {
  if (text.empty()) return false;
  size_t i = 0;
  bool neg = false;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    i = 1;
  }
  if (i >= text.size()) return false;
  __int128 whole = 0;
  bool any = false;
  for (; i < text.size() && text[i] != '.'; ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
    whole = whole * 10 + (text[i] - '0');
    if (whole > (__int128)1 << 62) return false;
    any = true;
  }
  int64_t frac = 0;
  int digits = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    for (; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') return false;
      if (digits < 6) {
        frac = frac * 10 + (text[i] - '0');
        ++digits;
      } else if (text[i] != '0') {
        return false;  // more than micro precision
      }
      any = true;
    }
  }
  if (!any) return false;
  while (digits < 6) {
    frac *= 10;
    ++digits;
  }
  __int128 v = whole * 1000000 + frac;
  if (neg) v = -v;
  if (v > INT64_MAX || v < INT64_MIN) return false;
  out = static_cast<int64_t>(v);
  return true;
}

}  // namespace recirc
