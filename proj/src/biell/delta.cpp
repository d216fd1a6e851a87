#include "biell/delta.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace biell {

namespace {

void require_same_type(SurfaceType a, SurfaceType b, const char* op) {
  if (!(a == b))
    throw std::domain_error(std::string(op) + ": arguments live over different surface types");
}

// Membership of (x, y) in the lattice with HNF columns (a, 0), (b, c):
// solve the triangular system exactly.
bool hnf_contains(const Int& a, const Int& b, const Int& c, const Int& x, const Int& y) {
  if (y % c != 0) return false;
  Int v = y / c;
  return (x - v * b) % a == 0;
}

// Smallest t > 0 with a | t*b, i.e. a / gcd(a, b); the e2-axis section of the
// lattice is generated by (0, c * t).
Int axis2_generator(const Int& a, const Int& b, const Int& c) {
  Int g = gcd(a, b);
  return c * (a / g);
}

}  // namespace

DeltaModel::DeltaModel(SurfaceType t, Int a, Int b, Int c)
    : type_(t), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  const SurfaceProfile p = surface_profile(t);
  if (a_ <= 0 || c_ <= 0 || b_ < 0 || b_ >= a_)
    throw std::domain_error("delta model: matrix is not in Hermite normal form");
  if (a_ != p.n)
    throw std::domain_error("delta model: e1-axis section must be generated by the fiber class A");
  if (!hnf_contains(a_, b_, c_, 0, p.k))
    throw std::domain_error("delta model: fiber class B is not in the divisor lattice");
  if (!p.split && axis2_generator(a_, b_, c_) != p.k)
    throw std::domain_error("delta model: e2-axis section must be generated by the fiber class B");
}

DeltaModel default_delta(SurfaceType t) {
  const SurfaceProfile p = surface_profile(t);
  return DeltaModel(t, p.n, 0, p.k);
}

std::vector<DeltaModel> enumerate_admissible_models(SurfaceType t) {
  const SurfaceProfile p = surface_profile(t);
  std::vector<DeltaModel> models;
  // Any admissible L contains <A, B> = nZ + kZ and has a == n, so it is
  // determined by a divisor c of k and an offset b in [0, n). Try them all and
  // keep the ones the constructor accepts.
  for (Int c = 1; c <= p.k; ++c) {
    if (p.k % c != 0) continue;
    for (Int b = 0; b < p.n; ++b) {
      try {
        models.emplace_back(t, Int(p.n), b, c);
      } catch (const std::domain_error&) {
        // not admissible
      }
    }
  }
  std::sort(models.begin(), models.end(), [](const DeltaModel& l, const DeltaModel& r) {
    if (l.a() != r.a()) return l.a() < r.a();
    if (l.b() != r.b()) return l.b() < r.b();
    return l.c() < r.c();
  });
  return models;
}

bool divisor_in_l(const DeltaModel& m, const DivisorClass& d) {
  require_same_type(m.type(), d.type(), "divisor_in_l");
  return hnf_contains(m.a(), m.b(), m.c(), d.x(), d.y());
}

DeltaVerdict check_delta(const DeltaModel& m, const NumClass& v) {
  require_same_type(m.type(), v.type(), "check_delta");
  const SurfaceProfile p = surface_profile(m.type());
  return DeltaVerdict{v.r() % p.n == 0, divisor_in_l(m, v.divisor())};
}

bool in_delta(const DeltaModel& m, const NumClass& v) { return check_delta(m, v).in(); }

std::array<NumClass, 4> delta_basis(const DeltaModel& m) {
  const SurfaceType t = m.type();
  const Int n = surface_profile(t).n;
  return {NumClass(t, n, 0, 0, 0), NumClass(t, 0, m.a(), 0, 0), NumClass(t, 0, m.b(), m.c(), 0),
          NumClass::p4(t)};
}

}  // namespace biell
