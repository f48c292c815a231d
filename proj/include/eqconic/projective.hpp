#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "eqconic/linalg.hpp"

namespace eqconic {

/// A point of P^2, stored with its first nonzero coordinate equal to 1.
class ProjPoint {
 public:
  ProjPoint(QuadExt x, QuadExt y, QuadExt z);
  explicit ProjPoint(const Vec& coords);

  const std::array<QuadExt, 3>& coords() const { return coords_; }
  Vec vec() const { return {coords_.begin(), coords_.end()}; }
  /// "[1:1:sqrt(-2)]".
  std::string to_string() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
  friend bool canonical_less(const ProjPoint& a, const ProjPoint& b);

 private:
  std::array<QuadExt, 3> coords_;
};

/// The line u*X + v*Y + w*Z = 0, normalized like a point.
class Line {
 public:
  Line(QuadExt u, QuadExt v, QuadExt w);
  explicit Line(const Vec& coeffs);
  static Line through(const ProjPoint& p, const ProjPoint& q);

  const std::array<QuadExt, 3>& coeffs() const { return coeffs_; }
  QuadExt evaluate(const ProjPoint& p) const;
  bool contains(const ProjPoint& p) const { return evaluate(p).is_zero(); }
  /// Two points spanning the line.
  std::array<ProjPoint, 2> points() const;
  /// "X - Y", "Z + sqrt(-2)*X".
  std::string to_string() const;

  friend bool operator==(const Line& a, const Line& b) { return a.coeffs_ == b.coeffs_; }
  friend bool canonical_less(const Line& a, const Line& b);

 private:
  std::array<QuadExt, 3> coeffs_;
};

ProjPoint intersect(const Line& a, const Line& b);

/// Quadratic form in the ordered basis x^2, y^2, z^2, yz, xz, xy.
class Conic {
 public:
  static constexpr std::array<const char*, 6> kBasis{"X^2", "Y^2", "Z^2", "YZ", "XZ", "XY"};

  Conic() = default;
  explicit Conic(std::array<QuadExt, 6> coeffs) : coeffs_(std::move(coeffs)) {}
  explicit Conic(const Vec& coeffs);
  /// The product of two lines.
  static Conic product(const Line& a, const Line& b);

  const std::array<QuadExt, 6>& coeffs() const { return coeffs_; }
  Vec vec() const { return {coeffs_.begin(), coeffs_.end()}; }
  bool is_zero() const;
  /// Symmetric matrix A with conic(p) = p^T A p; off-diagonal entries are half the mixed coefficients.
  Mat3 matrix() const;
  QuadExt evaluate(const Vec& p) const;
  QuadExt evaluate(const ProjPoint& p) const { return evaluate(p.vec()); }

  Conic operator+(const Conic& other) const;
  Conic operator*(const QuadExt& s) const;
  friend bool operator==(const Conic& a, const Conic& b) = default;

  /// "X^2 - Y^2", "2*X^2 + Z^2".
  std::string to_string() const;

 private:
  std::array<QuadExt, 6> coeffs_{};
};

/// Parses a homogeneous quadratic polynomial in X, Y, Z ("X^2 - Y^2",
/// "c*(X^2+Y^2) + d*Z^2", "2*X*Y", "XY"). Single-letter names other than
/// X, Y, Z are looked up in `params`. Throws InputError naming the bad token.
Conic parse_conic(std::string_view text, const std::map<std::string, Rational>& params = {});

/// Image of a point under p -> M p.
ProjPoint apply(const Mat3& m, const ProjPoint& p);

/// Induced map on quadratic forms in the basis of Conic, for a matrix whose
/// column j holds the image of the j-th variable. Throws InputError if singular.
Mat6 sym2(const Mat3& m);

/// The matrix acting on forms, f -> f o M^{-1}, for M acting on points.
Mat3 contragredient(const Mat3& m);

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

}  // namespace eqconic
