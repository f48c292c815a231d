#include "eqconic/projective.hpp"

#include <cctype>

#include "eqconic/error.hpp"

namespace eqconic {

namespace {

std::array<QuadExt, 3> normalized(std::array<QuadExt, 3> c, const char* what) {
  std::size_t lead = 0;
  while (lead < 3 && c[lead].is_zero()) ++lead;
  if (lead == 3) throw InputError(std::string("all-zero ") + what);
  const QuadExt inv = QuadExt(1) / c[lead];
  for (auto& x : c) x *= inv;
  return c;
}

std::array<QuadExt, 3> to_triple(const Vec& v) {
  if (v.size() != 3) throw InputError("expected three coordinates");
  return {v[0], v[1], v[2]};
}

Vec cross(const std::array<QuadExt, 3>& a, const std::array<QuadExt, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool triple_less(const std::array<QuadExt, 3>& a, const std::array<QuadExt, 3>& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    const auto c = canonical_compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

// "2*X", "-X", "sqrt(-2)*Z", "(1 + sqrt(2))*Y"
std::string scaled_term(const QuadExt& c, const std::string& monomial, bool first) {
  std::string sign;
  QuadExt mag = c;
  if (c.is_rational() && c.to_rational() < 0) {
    sign = "-";
    mag = -c;
  } else if (!c.is_rational() && c.rational_part() == 0 && c.radical_part() < 0) {
    sign = "-";
    mag = -c;
  } else {
    sign = "+";
  }
  std::string body;
  if (mag == QuadExt(1)) {
    body = monomial;
  } else if (mag.is_rational() || mag.rational_part() == 0) {
    body = mag.to_string() + "*" + monomial;
  } else {
    body = "(" + mag.to_string() + ")*" + monomial;
  }
  if (first) return (sign == "-" ? "-" : "") + body;
  return " " + sign + " " + body;
}

}  // namespace

ProjPoint::ProjPoint(QuadExt x, QuadExt y, QuadExt z)
    : coords_(normalized({std::move(x), std::move(y), std::move(z)}, "point")) {}

ProjPoint::ProjPoint(const Vec& coords) : coords_(normalized(to_triple(coords), "point")) {}

std::string ProjPoint::to_string() const {
  return "[" + coords_[0].to_string() + ":" + coords_[1].to_string() + ":" + coords_[2].to_string() + "]";
}

bool canonical_less(const ProjPoint& a, const ProjPoint& b) { return triple_less(a.coords_, b.coords_); }

Line::Line(QuadExt u, QuadExt v, QuadExt w) : coeffs_(normalized({std::move(u), std::move(v), std::move(w)}, "line")) {}

Line::Line(const Vec& coeffs) : coeffs_(normalized(to_triple(coeffs), "line")) {}

Line Line::through(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw InputError("a line needs two distinct points");
  return Line(cross(p.coords(), q.coords()));
}

QuadExt Line::evaluate(const ProjPoint& p) const {
  return coeffs_[0] * p.coords()[0] + coeffs_[1] * p.coords()[1] + coeffs_[2] * p.coords()[2];
}

std::array<ProjPoint, 2> Line::points() const {
  const auto kernel = Matrix::from_rows({Vec(coeffs_.begin(), coeffs_.end())}).kernel();
  return {ProjPoint(kernel[0]), ProjPoint(kernel[1])};
}

std::string Line::to_string() const {
  static constexpr std::array<const char*, 3> names{"X", "Y", "Z"};
  std::string out;
  for (std::size_t i = 0; i < 3; ++i)
    if (!coeffs_[i].is_zero()) out += scaled_term(coeffs_[i], names[i], out.empty());
  return out;
}

bool canonical_less(const Line& a, const Line& b) { return triple_less(a.coeffs_, b.coeffs_); }

ProjPoint intersect(const Line& a, const Line& b) {
  if (a == b) throw InputError("intersection of a line with itself");
  return ProjPoint(cross(a.coeffs(), b.coeffs()));
}

Conic::Conic(const Vec& coeffs) {
  if (coeffs.size() != 6) throw InputError("a conic has six coefficients");
  std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

Conic Conic::product(const Line& a, const Line& b) {
  const auto& l = a.coeffs();
  const auto& m = b.coeffs();
  return Conic(std::array<QuadExt, 6>{l[0] * m[0], l[1] * m[1], l[2] * m[2], l[1] * m[2] + l[2] * m[1],
                                      l[0] * m[2] + l[2] * m[0], l[0] * m[1] + l[1] * m[0]});
}

bool Conic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

Mat3 Conic::matrix() const {
  const QuadExt half = QuadExt(Rational(1, 2));
  Mat3 a(3, 3);
  a(0, 0) = coeffs_[0];
  a(1, 1) = coeffs_[1];
  a(2, 2) = coeffs_[2];
  a(1, 2) = a(2, 1) = coeffs_[3] * half;
  a(0, 2) = a(2, 0) = coeffs_[4] * half;
  a(0, 1) = a(1, 0) = coeffs_[5] * half;
  return a;
}

QuadExt Conic::evaluate(const Vec& p) const {
  if (p.size() != 3) throw InputError("expected three coordinates");
  return coeffs_[0] * p[0] * p[0] + coeffs_[1] * p[1] * p[1] + coeffs_[2] * p[2] * p[2] +
         coeffs_[3] * p[1] * p[2] + coeffs_[4] * p[0] * p[2] + coeffs_[5] * p[0] * p[1];
}

Conic Conic::operator+(const Conic& other) const {
  Conic out = *this;
  for (std::size_t i = 0; i < 6; ++i) out.coeffs_[i] += other.coeffs_[i];
  return out;
}

Conic Conic::operator*(const QuadExt& s) const {
  Conic out = *this;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

std::string Conic::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < 6; ++i)
    if (!coeffs_[i].is_zero()) out += scaled_term(coeffs_[i], kBasis[i], out.empty());
  return out.empty() ? "0" : out;
}

namespace {

using Monomial = std::array<int, 3>;
using Poly = std::map<Monomial, Rational>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
      if (m[0] + m[1] + m[2] > 2) throw InputError("conic expression has degree above 2");
      out[m] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Poly poly_add(Poly a, const Poly& b, int sign) {
  for (const auto& [m, c] : b) a[m] += sign * c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

class ConicParser {
 public:
  ConicParser(std::string_view text, const std::map<std::string, Rational>& params)
      : text_(text), params_(params) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("bad conic '" + std::string(text_) + "' at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Poly expr() {
    Poly acc;
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = text_[pos_++] == '-' ? -1 : 1;
    acc = poly_add(acc, term(), sign);
    while (peek() == '+' || peek() == '-') {
      sign = text_[pos_++] == '-' ? -1 : 1;
      acc = poly_add(acc, term(), sign);
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = poly_mul(acc, factor());
      } else if (starts_factor(c)) {
        acc = poly_mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      Poly out{{Monomial{0, 0, 0}, Rational(1)}};
      for (int i = 0; i < e; ++i) out = poly_mul(out, base);
      return out;
    }
    return base;
  }

  Poly primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      return {{Monomial{0, 0, 0}, parse_rational(text_.substr(start, pos_ - start))}};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      switch (c) {
        case 'X': case 'x': return {{Monomial{1, 0, 0}, Rational(1)}};
        case 'Y': case 'y': return {{Monomial{0, 1, 0}, Rational(1)}};
        case 'Z': case 'z': return {{Monomial{0, 0, 1}, Rational(1)}};
        default: break;
      }
      const auto it = params_.find(std::string(1, c));
      if (it == params_.end()) {
        --pos_;
        fail("unknown symbol '" + std::string(1, c) + "'");
      }
      return {{Monomial{0, 0, 0}, it->second}};
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::map<std::string, Rational>& params_;
  std::size_t pos_ = 0;
};

}  // namespace

Conic parse_conic(std::string_view text, const std::map<std::string, Rational>& params) {
  const Poly p = ConicParser(text, params).parse();
  static const std::map<Monomial, std::size_t> slot{
      {{2, 0, 0}, 0}, {{0, 2, 0}, 1}, {{0, 0, 2}, 2}, {{0, 1, 1}, 3}, {{1, 0, 1}, 4}, {{1, 1, 0}, 5}};
  std::array<QuadExt, 6> coeffs{};
  for (const auto& [m, c] : p) {
    const auto it = slot.find(m);
    if (it == slot.end()) throw InputError("conic '" + std::string(text) + "' is not homogeneous of degree 2");
    coeffs[it->second] = QuadExt(c);
  }
  Conic conic(coeffs);
  if (conic.is_zero()) throw InputError("conic '" + std::string(text) + "' is zero");
  return conic;
}

ProjPoint apply(const Mat3& m, const ProjPoint& p) { return ProjPoint(m * p.vec()); }

Mat6 sym2(const Mat3& m) {
  if (m.rows() != 3 || m.cols() != 3) throw InputError("sym2 needs a 3x3 matrix");
  if (m.determinant().is_zero()) throw InputError("sym2 of a singular matrix");
  // basis monomial k = x_i x_j
  static constexpr std::array<std::array<std::size_t, 2>, 6> pairs{{{0, 0}, {1, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}}};
  Mat6 out(6, 6);
  for (std::size_t col = 0; col < 6; ++col) {
    const auto alpha = m.column(pairs[col][0]);
    const auto beta = m.column(pairs[col][1]);
    for (std::size_t row = 0; row < 6; ++row) {
      const auto i = pairs[row][0];
      const auto j = pairs[row][1];
      out(row, col) = i == j ? alpha[i] * beta[i] : alpha[i] * beta[j] + alpha[j] * beta[i];
    }
  }
  return out;
}

Mat3 contragredient(const Mat3& m) { return m.inverse().transpose(); }

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return Matrix::from_rows({p.vec(), q.vec(), r.vec()}).determinant().is_zero();
}

}  // namespace eqconic
