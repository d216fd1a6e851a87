#include "biell/int.hpp"

#include <stdexcept>
#include <utility>

namespace biell {

Xgcd xgcd(Int a, Int b) {
  // Iterative extended Euclid on (a, b); signs are folded back in at the end.
  Int old_r = a, r = b;
  Int old_u = 1, u = 0;
  Int old_v = 0, v = 1;
  while (r != 0) {
    Int q = old_r / r;  // truncated division is fine: invariants hold for any quotient
    old_r -= q * r;
    std::swap(old_r, r);
    old_u -= q * u;
    std::swap(old_u, u);
    old_v -= q * v;
    std::swap(old_v, v);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  return Xgcd{std::move(old_r), std::move(old_u), std::move(old_v)};
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  Int q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod_floor(const Int& a, const Int& m) {
  if (m == 0) throw std::domain_error("mod_floor: zero modulus");
  Int mm = m < 0 ? Int(-m) : m;
  Int r = a % mm;
  if (r < 0) r += mm;
  return r;
}

}  // namespace biell
