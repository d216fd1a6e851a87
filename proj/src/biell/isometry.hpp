#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "biell/delta.hpp"
#include "biell/lattice.hpp"

namespace biell {

/// Dense 4x4 integer matrix over the ordered basis (p0, e1, e2, p4).
struct Mat4 {
  std::array<Int, 16> e{};

  static Mat4 identity();

  Int& at(int i, int j) { return e[static_cast<std::size_t>(i) * 4 + static_cast<std::size_t>(j)]; }
  const Int& at(int i, int j) const {
    return e[static_cast<std::size_t>(i) * 4 + static_cast<std::size_t>(j)];
  }

  Mat4 transpose() const;
  Mat4 operator-() const;
  friend Mat4 operator*(const Mat4& a, const Mat4& b);
  std::array<Int, 4> apply(const std::array<Int, 4>& v) const;
  friend bool operator==(const Mat4& a, const Mat4& b) noexcept = default;
};

/// Gram matrix G of the Euler pairing in the basis (p0, e1, e2, p4):
/// antidiagonal (1, -1, -1, 1). G is an involution, so isometries invert as
/// m^-1 = G m^T G.
const Mat4& euler_gram();

/// m^T G m == G.
bool is_isometry(const Mat4& m);

/// A lattice isometry of N(S); the matrix condition is type-independent, so a
/// NumIsometry can be applied over any surface type. Validated on construction.
class NumIsometry {
 public:
  explicit NumIsometry(Mat4 m);  // throws precondition_error unless is_isometry(m)

  static NumIsometry identity() { return NumIsometry(Mat4::identity()); }

  const Mat4& matrix() const noexcept { return m_; }
  NumIsometry inverse() const;
  friend NumIsometry operator*(const NumIsometry& a, const NumIsometry& b);
  NumClass apply(const NumClass& v) const;
  friend bool operator==(const NumIsometry& a, const NumIsometry& b) noexcept = default;

 private:
  Mat4 m_;
};

/// The four isometries of the hyperbolic divisor lattice: identity, total
/// negation, the swap of the two isotropic axes, and negated swap. They form
/// a Klein four-group.
enum class UIsometry { id = 0, iota = 1, sigma = 2, iota_sigma = 3 };

inline constexpr std::array<UIsometry, 4> kAllUIsometries = {
    UIsometry::id, UIsometry::iota, UIsometry::sigma, UIsometry::iota_sigma};

UIsometry u_mul(UIsometry a, UIsometry b);
std::string_view u_name(UIsometry u);
UIsometry u_from_name(std::string_view name);  // throws std::invalid_argument

/// Embed psi as id + psi + id acting only on the divisor coordinates.
NumIsometry block(UIsometry psi);

/// 2x2 integer matrix written in the row order (c, a; d, b); the letter side
/// conditions ask for determinant c*b - a*d == 1.
struct SL2 {
  Int c, a, d, b;

  Int det() const { return c * b - a * d; }
  friend bool operator==(const SL2& l, const SL2& r) noexcept = default;
};

/// One generator of the isometry group realized by derived equivalences:
///   shift            acts by -I;
///   tlb(mx,my)       tensoring by a line bundle with c1 = mx*e1 + my*e2;
///   fma(c,a,d,b)     relative Fourier-Mukai along the fibration with fiber A,
///                    side condition k | d; acts by N + N with
///                    N = (c, a*k; d/k, b) on the pairs (r, x) and (y, s);
///   fmb(c,a,d,b)     the same along the fibration with fiber B, n | d,
///                    N = (c, a*n; d/n, b) on the pairs (r, y) and (x, s).
/// A letter may carry a formal-inverse flag; inverses are permitted even when
/// the geometric existence condition a > 0 fails, because the lattice group is
/// closed under inversion. Every letter carries its surface type.
class GeneratorLetter {
 public:
  enum class Kind { shift, tensor_lb, rel_fm_a, rel_fm_b };

  static GeneratorLetter shift(SurfaceType t);
  static GeneratorLetter tensor_lb(const DivisorClass& m);
  static GeneratorLetter rel_fm_a(SurfaceType t, SL2 m);  // validates det and k | d
  static GeneratorLetter rel_fm_b(SurfaceType t, SL2 m);  // validates det and n | d

  Kind kind() const noexcept { return kind_; }
  SurfaceType type() const noexcept { return type_; }
  const DivisorClass& twist() const;  // tensor_lb only
  const SL2& sl2() const;             // rel_fm_* only
  bool is_inverted() const noexcept { return inverted_; }

  GeneratorLetter inverted() const;

  /// True when the letter (ignoring the inverse flag) satisfies the geometric
  /// realizability condition a > 0 of the relative Fourier-Mukai construction.
  /// Metadata only; no operation requires it.
  bool geometric() const noexcept;

  /// The induced lattice isometry (inverse flag applied).
  NumIsometry action() const;

  friend bool operator==(const GeneratorLetter& a, const GeneratorLetter& b) noexcept = default;

 private:
  GeneratorLetter(SurfaceType t, Kind kind, DivisorClass twist, SL2 m, bool inverted);

  SurfaceType type_;
  Kind kind_;
  DivisorClass twist_;  // meaningful for tensor_lb
  SL2 sl2_;             // meaningful for rel_fm_*
  bool inverted_ = false;
};

/// A finite sequence of letters over one surface type. compose() multiplies
/// the letter actions left to right, so the last letter acts first on classes.
class GeneratorWord {
 public:
  explicit GeneratorWord(SurfaceType t) : type_(t) {}
  GeneratorWord(SurfaceType t, std::vector<GeneratorLetter> letters);

  SurfaceType type() const noexcept { return type_; }
  const std::vector<GeneratorLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

  void push_back(GeneratorLetter l);
  friend GeneratorWord operator+(const GeneratorWord& a, const GeneratorWord& b);
  friend bool operator==(const GeneratorWord& a, const GeneratorWord& b) noexcept = default;

 private:
  SurfaceType type_;
  std::vector<GeneratorLetter> letters_;
};

NumIsometry compose(const GeneratorWord& w);

/// Does m map Delta onto Delta? Checked on a basis of Delta in both
/// directions, which suffices because Delta is a finite-index sublattice.
bool preserves_delta(const NumIsometry& m, const DeltaModel& model);

/// Index of the autoequivalence-induced subgroup inside the full isometry
/// group of Delta: the number of psi in O(U) whose block embedding preserves
/// Delta. Always 2 or 4.
int image_index(const DeltaModel& model);

}  // namespace biell
