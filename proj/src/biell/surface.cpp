#include "biell/surface.hpp"

#include <stdexcept>
#include <string>

namespace biell {

namespace {

struct Row {
  int n, k;
  const char* group;
  const char* lattice;
};

// Classification table, indexed by type - 1.
constexpr Row kTable[kNumSurfaceTypes] = {
    {2, 1, "Z/2", "arbitrary"},
    {2, 2, "Z/2 + Z/2", "arbitrary"},
    {3, 1, "Z/3", "Z + Z*omega"},
    {3, 3, "Z/3 + Z/3", "Z + Z*omega"},
    {4, 1, "Z/4", "Z + Z*i"},
    {4, 2, "Z/4 + Z/2", "Z + Z*i"},
    {6, 1, "Z/6", "Z + Z*omega"},
};

}  // namespace

SurfaceType::SurfaceType(int id) : id_(id) {
  if (id < 1 || id > kNumSurfaceTypes)
    throw std::invalid_argument("surface type must be 1..7, got " + std::to_string(id));
}

std::array<SurfaceType, kNumSurfaceTypes> all_surface_types() {
  return {SurfaceType(1), SurfaceType(2), SurfaceType(3), SurfaceType(4),
          SurfaceType(5), SurfaceType(6), SurfaceType(7)};
}

SurfaceProfile surface_profile(SurfaceType t) {
  const Row& row = kTable[t.id() - 1];
  SurfaceProfile p{t,     row.n,     row.k,     row.n * row.k, t.split(),
                   row.k, row.n,     row.group, row.lattice};
  return p;
}

}  // namespace biell
