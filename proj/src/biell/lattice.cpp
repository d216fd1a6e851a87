#include "biell/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace biell {

namespace {

void require_same_type(SurfaceType a, SurfaceType b, const char* op) {
  if (!(a == b))
    throw std::domain_error(std::string(op) + ": classes live over different surface types");
}

}  // namespace

DivisorClass::DivisorClass(SurfaceType t, Int x, Int y)
    : type_(t), x_(std::move(x)), y_(std::move(y)) {}

DivisorClass DivisorClass::fiber_a(SurfaceType t) {
  return {t, surface_profile(t).n, 0};
}

DivisorClass DivisorClass::fiber_b(SurfaceType t) {
  return {t, 0, surface_profile(t).k};
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  require_same_type(a.type_, b.type_, "divisor sum");
  return {a.type_, a.x_ + b.x_, a.y_ + b.y_};
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  require_same_type(a.type_, b.type_, "divisor difference");
  return {a.type_, a.x_ - b.x_, a.y_ - b.y_};
}

DivisorClass operator*(const Int& c, const DivisorClass& d) {
  return {d.type_, c * d.x_, c * d.y_};
}

Int intersect(const DivisorClass& a, const DivisorClass& b) {
  require_same_type(a.type(), b.type(), "intersect");
  return a.x() * b.y() + b.x() * a.y();
}

NumClass::NumClass(SurfaceType t, Int r, Int x, Int y, Int s)
    : type_(t), r_(std::move(r)), x_(std::move(x)), y_(std::move(y)), s_(std::move(s)) {}

NumClass::NumClass(SurfaceType t, Int r, const DivisorClass& d, Int s)
    : NumClass(t, std::move(r), d.x(), d.y(), std::move(s)) {
  require_same_type(t, d.type(), "class from divisor");
}

NumClass operator+(const NumClass& a, const NumClass& b) {
  require_same_type(a.type_, b.type_, "class sum");
  return {a.type_, a.r_ + b.r_, a.x_ + b.x_, a.y_ + b.y_, a.s_ + b.s_};
}

NumClass operator-(const NumClass& a, const NumClass& b) {
  require_same_type(a.type_, b.type_, "class difference");
  return {a.type_, a.r_ - b.r_, a.x_ - b.x_, a.y_ - b.y_, a.s_ - b.s_};
}

NumClass operator*(const Int& c, const NumClass& v) {
  return {v.type_, c * v.r_, c * v.x_, c * v.y_, c * v.s_};
}

Int euler_pairing(const NumClass& v, const NumClass& w) {
  require_same_type(v.type(), w.type(), "euler_pairing");
  return v.r() * w.s() + w.r() * v.s() - (v.x() * w.y() + w.x() * v.y());
}

bool is_isotropic(const NumClass& v) { return v.r() * v.s() == v.x() * v.y(); }

bool is_primitive(const NumClass& v) {
  if (v.is_zero()) throw std::domain_error("is_primitive: zero class has no content");
  Int g = gcd(gcd(v.r(), v.x()), gcd(v.y(), v.s()));
  return g == 1;
}

NumClass line_bundle_class(const DivisorClass& m) {
  // chi(O(m)) = m.m / 2; the self-intersection 2*x*y is even by construction.
  return {m.type(), 1, m.x(), m.y(), m.x() * m.y()};
}

}  // namespace biell
