#include "apmono/ratio.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace apmono {
namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin = std::numeric_limits<std::int64_t>::min();

}  // namespace

Ratio::Ratio(std::int64_t num) : num_(num), den_(1) {}

Ratio::Ratio(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

Ratio Ratio::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("Ratio: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || num < kMin || den > kMax)
    throw std::overflow_error("Ratio: result does not fit in 64 bits");
  Ratio r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Ratio Ratio::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Ratio& Ratio::operator+=(const Ratio& o) {
  return *this = from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                           static_cast<__int128>(den_) * o.den_);
}

Ratio& Ratio::operator-=(const Ratio& o) { return *this += -o; }

Ratio& Ratio::operator*=(const Ratio& o) {
  // Cross-reduce first so products of already-reduced values stay small.
  __int128 g1 = gcd128(num_, o.den_);
  __int128 g2 = gcd128(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return *this = from_wide((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
}

Ratio& Ratio::operator/=(const Ratio& o) {
  if (o.num_ == 0) throw std::domain_error("Ratio: division by zero");
  return *this *= from_wide(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::int64_t Ratio::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Ratio::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Ratio::str(bool always_slash) const {
  if (!always_slash && den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Ratio Ratio::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Ratio(v);
    }
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    std::int64_t n = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    std::int64_t d = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return Ratio(n, d);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("Ratio: cannot parse '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

}  // namespace apmono
