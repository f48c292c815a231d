#include "eqconic/quadext.hpp"

#include "eqconic/error.hpp"

namespace eqconic {

namespace {

std::optional<BigInt> exact_isqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  auto num = exact_isqrt(boost::multiprecision::numerator(q));
  auto den = exact_isqrt(boost::multiprecision::denominator(q));
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto parse_int = [&](std::string_view s) -> BigInt {
    s = trim(s);
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
      throw InputError("not a rational number: '" + std::string(text) + "'");
    return BigInt(std::string(s.front() == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string rational_to_string(const Rational& q) { return q.str(); }

SquarefreeSplit squarefree_split(const Rational& r) {
  if (r == 0) return {0, Rational(0)};
  // r = n/d = n*d / d^2; split the integer n*d.
  BigInt n = boost::multiprecision::numerator(r) * boost::multiprecision::denominator(r);
  const int sign = n < 0 ? -1 : 1;
  if (n < 0) n = -n;
  if (n > BigInt(1000000000000LL)) throw ScopeError("radicand too large to factor: " + r.str());
  auto v = n.convert_to<std::int64_t>();
  std::int64_t square_part = 1;
  std::int64_t free_part = 1;
  for (std::int64_t p = 2; p * p <= v; ++p) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) square_part *= p;
    if (e % 2) free_part *= p;
  }
  free_part *= v;
  return {sign * free_part, Rational(square_part) / boost::multiprecision::denominator(r)};
}

QuadExt::QuadExt(Rational a, Rational b, std::int64_t m) : a_(std::move(a)), b_(std::move(b)), m_(m) {
  if (b_ != 0) {
    if (m == 0 || m == 1 || squarefree_split(Rational(m)).radicand != m)
      throw InputError("radicand must be a squarefree integer other than 0 and 1, got " + std::to_string(m));
  }
  normalize();
}

QuadExt QuadExt::sqrt_of(const Rational& r) {
  if (auto q = rational_sqrt(r)) return QuadExt(*q);
  const auto split = squarefree_split(r);
  return QuadExt(Rational(0), split.root, split.radicand);
}

const Rational& QuadExt::to_rational() const {
  if (!is_rational()) throw ScopeError("expected a rational value, got " + to_string());
  return a_;
}

QuadExt QuadExt::conjugate() const {
  QuadExt out = *this;
  out.b_ = -out.b_;
  return out;
}

Rational QuadExt::norm() const { return a_ * a_ - Rational(m_) * b_ * b_; }

std::optional<QuadExt> QuadExt::sqrt() const {
  if (is_rational()) {
    if (auto q = rational_sqrt(a_)) return QuadExt(*q);
    return sqrt_of(a_);
  }
  // (c + d sqrt m)^2 = a + b sqrt m  <=>  c^2 + m d^2 = a, 2cd = b.
  const auto root_norm = rational_sqrt(norm());
  if (!root_norm) return std::nullopt;
  for (const Rational& n : {*root_norm, Rational(-*root_norm)}) {
    const Rational c2 = (a_ + n) / 2;
    if (c2 == 0) continue;
    if (auto c = rational_sqrt(c2)) {
      QuadExt y(*c, b_ / (2 * *c), m_);
      if (y * y == *this) return y;
    }
  }
  return std::nullopt;
}

std::int64_t QuadExt::merged_radicand(const QuadExt& y) const {
  if (b_ == 0) return y.m_;
  if (y.b_ == 0 || m_ == y.m_) return m_;
  throw FieldMismatch("cannot combine values of Q(sqrt(" + std::to_string(m_) + ")) and Q(sqrt(" +
                      std::to_string(y.m_) + "))");
}

QuadExt QuadExt::operator-() const {
  QuadExt out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

QuadExt& QuadExt::operator+=(const QuadExt& y) {
  m_ = merged_radicand(y);
  a_ += y.a_;
  b_ += y.b_;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& y) { return *this += -y; }

QuadExt& QuadExt::operator*=(const QuadExt& y) {
  const auto m = merged_radicand(y);
  Rational a = a_ * y.a_ + Rational(m) * b_ * y.b_;
  Rational b = a_ * y.b_ + b_ * y.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  m_ = m;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& y) {
  if (y.is_zero()) throw InputError("division by zero");
  merged_radicand(y);
  const Rational n = y.norm();
  *this *= y.conjugate();
  a_ /= n;
  b_ /= n;
  normalize();
  return *this;
}

std::strong_ordering canonical_compare(const QuadExt& x, const QuadExt& y) {
  if (x.a_ != y.a_) return x.a_ < y.a_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (x.b_ != y.b_) return x.b_ < y.b_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return x.m_ <=> y.m_;
}

std::string QuadExt::to_string() const {
  if (b_ == 0) return a_.str();
  const std::string root = "sqrt(" + std::to_string(m_) + ")";
  std::string radical;
  Rational mag = b_ < 0 ? Rational(-b_) : b_;
  radical = mag == 1 ? root : mag.str() + "*" + root;
  if (a_ == 0) return (b_ < 0 ? "-" : "") + radical;
  return a_.str() + (b_ < 0 ? " - " : " + ") + radical;
}

}  // namespace eqconic
