#include "sgpc/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace sgpc {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(v);
}

Rational make(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal_string() const {
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return to_string();
  int digits = std::max(twos, fives);
  if (digits == 0) return std::to_string(num_);
  i128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  i128 scaled = static_cast<i128>(num_) * (scale / den_);
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  auto whole = static_cast<std::int64_t>(scaled / scale);
  auto frac = static_cast<std::int64_t>(scaled % scale);
  std::string frac_text = std::to_string(frac);
  frac_text.insert(0, static_cast<std::size_t>(digits) - frac_text.size(), '0');
  while (!frac_text.empty() && frac_text.back() == '0') frac_text.pop_back();
  std::string out = negative ? "-" : "";
  out += std::to_string(whole);
  if (!frac_text.empty()) out += "." + frac_text;
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
              static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
              static_cast<i128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero rational");
  return make(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 lhs = static_cast<i128>(a.num_) * b.den_;
  i128 rhs = static_cast<i128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();

  auto parse_int = [&](std::string_view s, std::int64_t& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t n = 0, d = 0;
    if (!parse_int(text.substr(0, slash), n) || !parse_int(text.substr(slash + 1), d) || d == 0)
      return fail();
    return Rational(n, d);
  }

  auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    std::int64_t n = 0;
    if (!parse_int(text, n)) return fail();
    return Rational(n);
  }

  std::string_view whole = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  bool negative = !whole.empty() && whole.front() == '-';
  if (negative) whole.remove_prefix(1);
  if (frac.empty() || frac.size() > 15) return fail();
  for (char c : frac)
    if (c < '0' || c > '9') return fail();
  std::int64_t w = 0;
  if (!whole.empty() && (!parse_int(whole, w) || w < 0)) return fail();
  std::int64_t f = 0;
  if (!parse_int(frac, f)) return fail();
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  Rational value = Rational(w) + Rational(f, scale);
  return negative ? Rational(0) - value : value;
}

}  // namespace sgpc
