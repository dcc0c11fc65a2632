#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace apmono {

/// Exact fraction num/den, always reduced with den > 0.
///
/// Values are stored in 64 bits; every intermediate product is formed in
/// 128 bits and the reduced result must fit back into 64 bits, otherwise
/// std::overflow_error is thrown.
class Ratio {
 public:
  constexpr Ratio() = default;
  Ratio(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Ratio(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Ratio operator-() const;
  Ratio& operator+=(const Ratio& o);
  Ratio& operator-=(const Ratio& o);
  Ratio& operator*=(const Ratio& o);
  Ratio& operator/=(const Ratio& o);

  friend Ratio operator+(Ratio a, const Ratio& b) { return a += b; }
  friend Ratio operator-(Ratio a, const Ratio& b) { return a -= b; }
  friend Ratio operator*(Ratio a, const Ratio& b) { return a *= b; }
  friend Ratio operator/(Ratio a, const Ratio& b) { return a /= b; }

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

  std::int64_t floor() const;
  std::int64_t ceil() const;
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "num/den", or just "num" when den == 1 and `always_slash` is false.
  std::string str(bool always_slash = true) const;
  static Ratio parse(const std::string& text);

 private:
  static Ratio from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Ratio& r);

}  // namespace apmono
