#pragma once

#include "biell/int.hpp"
#include "biell/surface.hpp"

namespace biell {

/// An element of the divisor lattice Num(S) = Z*e1 + Z*e2, written in the
/// basis e1 = (1/n)A, e2 = (1/k)B of fractional fiber classes. The pairing is
/// hyperbolic: e1.e1 = e2.e2 = 0, e1.e2 = 1, so A.B = n*k.
class DivisorClass {
 public:
  DivisorClass(SurfaceType t, Int x, Int y);

  static DivisorClass zero(SurfaceType t) { return {t, 0, 0}; }
  static DivisorClass e1(SurfaceType t) { return {t, 1, 0}; }
  static DivisorClass e2(SurfaceType t) { return {t, 0, 1}; }
  /// A = n*e1, the fiber class of the fibration over the elliptic base.
  static DivisorClass fiber_a(SurfaceType t);
  /// B = k*e2, the fiber class of the fibration over the rational base.
  static DivisorClass fiber_b(SurfaceType t);

  SurfaceType type() const noexcept { return type_; }
  const Int& x() const noexcept { return x_; }
  const Int& y() const noexcept { return y_; }
  bool is_zero() const noexcept { return x_ == 0 && y_ == 0; }

  DivisorClass operator-() const { return {type_, -x_, -y_}; }
  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator*(const Int& c, const DivisorClass& d);
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) noexcept = default;

 private:
  SurfaceType type_;
  Int x_, y_;
};

/// Intersection number D.D' = x*y' + x'*y. Mixed surface types are rejected.
Int intersect(const DivisorClass& a, const DivisorClass& b);

/// An element (r, D, s) of the numerical Grothendieck lattice
/// N(S) = Z + Num(S) + Z: rank, first Chern class, Euler characteristic.
/// Coordinates are (r, x, y, s) with D = x*e1 + y*e2.
class NumClass {
 public:
  NumClass(SurfaceType t, Int r, Int x, Int y, Int s);
  NumClass(SurfaceType t, Int r, const DivisorClass& d, Int s);

  /// Ordered basis (p0, e1, e2, p4) used for all matrix representations:
  /// p0 = (1,0,0,0), e1 = (0,1,0,0), e2 = (0,0,1,0), p4 = (0,0,0,1).
  static NumClass p0(SurfaceType t) { return {t, 1, 0, 0, 0}; }
  static NumClass e1(SurfaceType t) { return {t, 0, 1, 0, 0}; }
  static NumClass e2(SurfaceType t) { return {t, 0, 0, 1, 0}; }
  static NumClass p4(SurfaceType t) { return {t, 0, 0, 0, 1}; }                   // class of a point
  static NumClass zero(SurfaceType t) { return {t, 0, 0, 0, 0}; }

  SurfaceType type() const noexcept { return type_; }
  const Int& r() const noexcept { return r_; }
  const Int& x() const noexcept { return x_; }
  const Int& y() const noexcept { return y_; }
  const Int& s() const noexcept { return s_; }
  DivisorClass divisor() const { return {type_, x_, y_}; }
  bool is_zero() const noexcept { return r_ == 0 && x_ == 0 && y_ == 0 && s_ == 0; }

  NumClass operator-() const { return {type_, -r_, -x_, -y_, -s_}; }
  friend NumClass operator+(const NumClass& a, const NumClass& b);
  friend NumClass operator-(const NumClass& a, const NumClass& b);
  friend NumClass operator*(const Int& c, const NumClass& v);
  friend bool operator==(const NumClass& a, const NumClass& b) noexcept = default;

 private:
  SurfaceType type_;
  Int r_, x_, y_, s_;
};

/// Euler pairing chi(v, w) = r*s' + r'*s - D.D'. Symmetric, unimodular.
Int euler_pairing(const NumClass& v, const NumClass& w);

/// chi(v, v) == 0, i.e. r*s == x*y.
bool is_isotropic(const NumClass& v);

/// gcd of the four coordinates is 1. The zero class is rejected.
bool is_primitive(const NumClass& v);

/// Class of a line bundle with first Chern class m: (1, m, m.m/2).
/// m.m = 2*x*y is always even, so the Euler characteristic is exact.
NumClass line_bundle_class(const DivisorClass& m);

}  // namespace biell
