#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "biell/biell.hpp"

using namespace biell;

TEST_SUITE("surface") {
  TEST_CASE("classification table") {
    struct Row {
      int id, n, k;
      bool split;
      const char* group;
      const char* lattice;
    };
    const Row rows[] = {
        {1, 2, 1, true, "Z/2", "arbitrary"},
        {2, 2, 2, false, "Z/2 + Z/2", "arbitrary"},
        {3, 3, 1, true, "Z/3", "Z + Z*omega"},
        {4, 3, 3, false, "Z/3 + Z/3", "Z + Z*omega"},
        {5, 4, 1, true, "Z/4", "Z + Z*i"},
        {6, 4, 2, false, "Z/4 + Z/2", "Z + Z*i"},
        {7, 6, 1, true, "Z/6", "Z + Z*omega"},
    };
    for (const Row& row : rows) {
      CAPTURE(row.id);
      const SurfaceProfile p = surface_profile(SurfaceType(row.id));
      CHECK(p.type.id() == row.id);
      CHECK(p.n == row.n);
      CHECK(p.k == row.k);
      CHECK(p.g_order == row.n * row.k);
      CHECK(p.split == row.split);
      CHECK(p.lambda_p_a == row.k);
      CHECK(p.lambda_p_b == row.n);
      CHECK(p.group == row.group);
      CHECK(p.lattice == row.lattice);
    }
  }

  TEST_CASE("multisection degrees by brute-force minimization") {
    // The multisection degree of a fibration is the least positive
    // intersection of its fiber class with an integral divisor. Minimized
    // here over a coordinate box, independently of the stored table.
    for (SurfaceType t : all_surface_types()) {
      CAPTURE(t.id());
      const SurfaceProfile p = surface_profile(t);
      const DivisorClass fa = DivisorClass::fiber_a(t);
      const DivisorClass fb = DivisorClass::fiber_b(t);
      Int min_a = -1, min_b = -1;  // -1 = not yet seen
      for (int x = -9; x <= 9; ++x)
        for (int y = -9; y <= 9; ++y) {
          const DivisorClass d(t, x, y);
          const Int da = intersect(fb, d);  // fibration with fiber B
          const Int db = intersect(fa, d);  // fibration with fiber A
          if (da > 0 && (min_a < 0 || da < min_a)) min_a = da;
          if (db > 0 && (min_b < 0 || db < min_b)) min_b = db;
        }
      CHECK(min_a == p.lambda_p_a);
      CHECK(min_b == p.lambda_p_b);
    }
  }

  TEST_CASE("worked row: type 6") {
    const SurfaceProfile p = surface_profile(SurfaceType(6));
    CHECK(p.n == 4);
    CHECK(p.k == 2);
    CHECK(p.g_order == 8);
    CHECK_FALSE(p.split);
    CHECK(p.lambda_p_a == 2);
    CHECK(p.lambda_p_b == 4);
  }

  TEST_CASE("invalid ids are rejected") {
    CHECK_THROWS_AS(SurfaceType(0), std::invalid_argument);
    CHECK_THROWS_AS(SurfaceType(8), std::invalid_argument);
    CHECK_THROWS_AS(SurfaceType(-3), std::invalid_argument);
    CHECK_THROWS_AS(SurfaceType(std::numeric_limits<int>::max()), std::invalid_argument);
  }

  TEST_CASE("split exactly for trivial translation part") {
    for (SurfaceType t : all_surface_types()) {
      CAPTURE(t.id());
      CHECK(t.split() == (surface_profile(t).k == 1));
    }
  }

  TEST_CASE("all_surface_types enumerates 1..7 in order") {
    const auto all = all_surface_types();
    REQUIRE(all.size() == 7);
    for (int i = 0; i < 7; ++i) CHECK(all[static_cast<std::size_t>(i)].id() == i + 1);
  }
}
