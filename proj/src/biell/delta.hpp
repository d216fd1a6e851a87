#pragma once

#include <array>
#include <vector>

#include "biell/lattice.hpp"

namespace biell {

/// A model of the special-class sublattice Delta = nZ + L + Z of N(S):
/// classes (r, D, s) with n | r and D in a sublattice L of Num(S).
///
/// L is stored as a column-style Hermite normal form
///
///     [ a  b ]        columns (a, 0) and (b, c),
///     [ 0  c ]        a > 0, c > 0, 0 <= b < a,
///
/// and must satisfy the admissibility conditions: both fiber classes A and B
/// lie in L, the e1-axis section of L is exactly Z*A (equivalently a == n),
/// and for non-split types the e2-axis section is exactly Z*B. The default
/// model is L = <A, B>. Construction validates everything.
class DeltaModel {
 public:
  DeltaModel(SurfaceType t, Int a, Int b, Int c);

  SurfaceType type() const noexcept { return type_; }
  const Int& a() const noexcept { return a_; }
  const Int& b() const noexcept { return b_; }
  const Int& c() const noexcept { return c_; }

  /// Row-major entries {a, b, 0, c}.
  std::array<Int, 4> hnf() const { return {a_, b_, Int(0), c_}; }

  /// Index [Num(S) : L] = a*c.
  Int divisor_index() const { return a_ * c_; }

  friend bool operator==(const DeltaModel& a, const DeltaModel& b) noexcept = default;

 private:
  SurfaceType type_;
  Int a_, b_, c_;
};

/// The model with L = <A, B>.
DeltaModel default_delta(SurfaceType t);

/// All admissible models, sorted by HNF entries (a, b, c); the default model
/// is always first. Split types have exactly one model.
std::vector<DeltaModel> enumerate_admissible_models(SurfaceType t);

/// Exact solve of the triangular system: is d in the column span of the HNF?
bool divisor_in_l(const DeltaModel& m, const DivisorClass& d);

/// Componentwise membership verdict for v in Delta.
struct DeltaVerdict {
  bool rank_ok;     // n | r
  bool divisor_ok;  // c1(v) in L
  bool in() const noexcept { return rank_ok && divisor_ok; }
};

DeltaVerdict check_delta(const DeltaModel& m, const NumClass& v);
bool in_delta(const DeltaModel& m, const NumClass& v);

/// A lattice basis of Delta: {n*p0, (0, la, 0), (0, lb, 0), p4} where la, lb
/// are the HNF columns of L.
std::array<NumClass, 4> delta_basis(const DeltaModel& m);

}  // namespace biell
