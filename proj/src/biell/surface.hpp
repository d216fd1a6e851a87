#pragma once

#include <array>
#include <string>

namespace biell {

inline constexpr int kNumSurfaceTypes = 7;

/// One of the seven numbered bielliptic surface types. Validated on
/// construction so every SurfaceType in circulation is a real row of the
/// classification table.
class SurfaceType {
 public:
  explicit SurfaceType(int id);  // throws std::invalid_argument unless 1..7

  int id() const noexcept { return id_; }

  /// Split types are the ones whose translation part is trivial (k == 1).
  bool split() const noexcept { return id_ == 1 || id_ == 3 || id_ == 5 || id_ == 7; }

  friend bool operator==(SurfaceType, SurfaceType) noexcept = default;

 private:
  int id_;
};

std::array<SurfaceType, kNumSurfaceTypes> all_surface_types();

/// Static numerical data of one surface type.
///
/// n is the order of the canonical class (degree of the canonical cover), k the
/// order of the complementary translation subgroup, so the acting group has
/// order n*k. The divisor lattice Num(S) is free of rank 2 on e1 = (1/n)A and
/// e2 = (1/k)B, where A and B are the two elliptic fiber classes; the
/// multisection degrees of the two fibrations are lambda_p_a = k and
/// lambda_p_b = n.
struct SurfaceProfile {
  SurfaceType type;
  int n;
  int k;
  int g_order;
  bool split;
  int lambda_p_a;
  int lambda_p_b;
  std::string group;    // isomorphism type of the acting group, e.g. "Z/4 + Z/2"
  std::string lattice;  // constraint on the period lattice of the second factor
};

SurfaceProfile surface_profile(SurfaceType t);

}  // namespace biell
