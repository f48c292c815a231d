#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace eqconic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "3", "-2/5". Throws InputError.
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);

/// r = square * radicand with radicand a squarefree integer (sign kept, 0 for r == 0).
struct SquarefreeSplit {
  std::int64_t radicand;
  Rational root;  ///< nonnegative, root^2 * radicand == r
};
SquarefreeSplit squarefree_split(const Rational& r);

/// Exact element a + b*sqrt(m) of Q(sqrt m), m a squarefree integer != 0, 1.
///
/// Values with b == 0 are plain rationals and mix with any field. Combining
/// two irrational values over different m throws FieldMismatch.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long long value) : a_(value) {}  // NOLINT: integers embed implicitly
  QuadExt(Rational value) : a_(std::move(value)) {}  // NOLINT
  QuadExt(Rational a, Rational b, std::int64_t m);

  /// sqrt(r) for a rational r, adjoining sqrt of its squarefree part when needed.
  static QuadExt sqrt_of(const Rational& r);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  /// 0 for rational values.
  std::int64_t radicand() const { return m_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  /// Requires is_rational().
  const Rational& to_rational() const;

  QuadExt conjugate() const;
  /// a^2 - m b^2.
  Rational norm() const;

  /// A square root inside Q(sqrt m) (or, for rationals, in Q or Q(sqrt r')).
  /// Empty when the root would need a second extension.
  std::optional<QuadExt> sqrt() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& y);
  QuadExt& operator-=(const QuadExt& y);
  QuadExt& operator*=(const QuadExt& y);
  QuadExt& operator/=(const QuadExt& y);
  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.m_ == y.m_);
  }
  /// Total order for canonical sorting only (not a field order).
  friend std::strong_ordering canonical_compare(const QuadExt& x, const QuadExt& y);

  /// "3", "-1/2", "sqrt(-2)", "1 + 2*sqrt(-2)", "-sqrt(-1)".
  std::string to_string() const;

 private:
  void normalize() {
    if (b_ == 0) m_ = 0;
  }
  std::int64_t merged_radicand(const QuadExt& y) const;

  Rational a_;
  Rational b_;
  std::int64_t m_ = 0;
};

}  // namespace eqconic
