#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "biell/biell.hpp"

using namespace biell;

namespace {

using Residue = std::pair<int, int>;
using ResidueSet = std::set<Residue>;

// Closure of a generating set inside Z/n x Z/k.
ResidueSet closure(std::vector<Residue> gens, int n, int k) {
  ResidueSet h{{0, 0}};
  for (auto& g : gens) h.insert({((g.first % n) + n) % n, ((g.second % k) + k) % k});
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Residue& a : ResidueSet(h))
      for (const Residue& b : ResidueSet(h)) {
        Residue c{(a.first + b.first) % n, (a.second + b.second) % k};
        if (h.insert(c).second) grew = true;
      }
  }
  return h;
}

// Independent oracle for the divisor-lattice census: subgroups H of
// Z/n x Z/k meeting both coordinate axes trivially. Admissible lattices L
// correspond one-to-one to such H via H = L / <A, B>; the axis conditions
// say the two fiber classes stay primitive directions of L.
std::set<ResidueSet> admissible_subgroups(int n, int k) {
  std::set<ResidueSet> out;
  for (int x1 = 0; x1 < n; ++x1)
    for (int y1 = 0; y1 < k; ++y1)
      for (int x2 = 0; x2 < n; ++x2)
        for (int y2 = 0; y2 < k; ++y2) {
          ResidueSet h = closure({{x1, y1}, {x2, y2}}, n, k);
          bool ok = true;
          for (const Residue& g : h)
            if ((g.second == 0 && g.first != 0) || (g.first == 0 && g.second != 0)) ok = false;
          if (ok) out.insert(h);
        }
  return out;
}

// Residue set of a model, computed from its HNF columns only (not via the
// membership solver under test).
ResidueSet model_residues(const DeltaModel& m, int n, int k) {
  return closure({{static_cast<int>(m.b()), static_cast<int>(m.c())}}, n, k);
}

// Residue set of a model as seen by the membership solver.
ResidueSet solver_residues(const DeltaModel& m, int n, int k) {
  ResidueSet r;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < k; ++y)
      if (divisor_in_l(m, DivisorClass(m.type(), x, y))) r.insert({x, y});
  return r;
}

}  // namespace

TEST_SUITE("delta") {
  TEST_CASE("default model is the fiber lattice") {
    for (SurfaceType t : all_surface_types()) {
      CAPTURE(t.id());
      const SurfaceProfile p = surface_profile(t);
      const DeltaModel d = default_delta(t);
      CHECK(d.a() == p.n);
      CHECK(d.b() == 0);
      CHECK(d.c() == p.k);
      CHECK(d.divisor_index() == p.n * p.k);
    }
  }

  TEST_CASE("model census matches the subgroup oracle") {
    const int expected_counts[7] = {1, 2, 1, 3, 1, 2, 1};
    for (SurfaceType t : all_surface_types()) {
      CAPTURE(t.id());
      const SurfaceProfile p = surface_profile(t);
      const auto models = enumerate_admissible_models(t);
      CHECK(models.size() ==
            static_cast<std::size_t>(expected_counts[static_cast<std::size_t>(t.id() - 1)]));

      // The sets of residue subgroups must agree exactly.
      std::set<ResidueSet> from_models;
      for (const DeltaModel& m : models) from_models.insert(model_residues(m, p.n, p.k));
      CHECK(from_models.size() == models.size());
      CHECK(from_models == admissible_subgroups(p.n, p.k));

      // Membership solver agrees with the HNF columns, and the index
      // relation [Num : L] * |L / <A,B>| = n*k holds for every model.
      for (const DeltaModel& m : models) {
        const ResidueSet r = model_residues(m, p.n, p.k);
        CHECK(solver_residues(m, p.n, p.k) == r);
        CHECK(m.divisor_index() * Int(static_cast<int>(r.size())) == p.n * p.k);
      }
    }
  }

  TEST_CASE("canonical enumeration order") {
    for (SurfaceType t : all_surface_types()) {
      CAPTURE(t.id());
      const auto models = enumerate_admissible_models(t);
      REQUIRE(!models.empty());
      CHECK(models.front() == default_delta(t));
      auto key = [](const DeltaModel& m) { return std::array<Int, 3>{m.a(), m.b(), m.c()}; };
      for (std::size_t i = 1; i < models.size(); ++i)
        CHECK(key(models[i - 1]) < key(models[i]));
    }
  }

  TEST_CASE("worked model lists") {
    auto hnfs = [](SurfaceType t) {
      std::vector<std::array<Int, 4>> out;
      for (const DeltaModel& m : enumerate_admissible_models(t)) out.push_back(m.hnf());
      return out;
    };
    using V = std::vector<std::array<Int, 4>>;
    CHECK(hnfs(SurfaceType(1)) == V{{2, 0, 0, 1}});
    CHECK(hnfs(SurfaceType(2)) == V{{2, 0, 0, 2}, {2, 1, 0, 1}});
    CHECK(hnfs(SurfaceType(4)) == V{{3, 0, 0, 3}, {3, 1, 0, 1}, {3, 2, 0, 1}});
    CHECK(hnfs(SurfaceType(6)) == V{{4, 0, 0, 2}, {4, 2, 0, 1}});
    CHECK(hnfs(SurfaceType(7)) == V{{6, 0, 0, 1}});
  }

  TEST_CASE("membership, worked examples") {
    const SurfaceType t{1};
    const DeltaModel d = default_delta(t);
    CHECK(in_delta(d, NumClass(t, 0, 2, 0, 0)));
    CHECK(in_delta(d, NumClass(t, 2, 2, 1, 1)));
    CHECK(in_delta(d, NumClass::p4(t)));
    CHECK(in_delta(d, NumClass(t, 0, 0, 0, 7)));
    CHECK(in_delta(d, NumClass(t, -2, -2, -1, 5)));
    CHECK_FALSE(in_delta(d, NumClass(t, 0, 1, 0, 0)));
    CHECK_FALSE(in_delta(d, NumClass::p0(t)));

    const DeltaVerdict rank_bad = check_delta(d, NumClass(t, 1, 0, 0, 0));
    CHECK_FALSE(rank_bad.rank_ok);
    CHECK(rank_bad.divisor_ok);
    CHECK_FALSE(rank_bad.in());
    const DeltaVerdict div_bad = check_delta(d, NumClass(t, 0, 1, 0, 0));
    CHECK(div_bad.rank_ok);
    CHECK_FALSE(div_bad.divisor_ok);
    const DeltaVerdict both_bad = check_delta(d, NumClass(t, 1, 1, 0, 0));
    CHECK_FALSE(both_bad.rank_ok);
    CHECK_FALSE(both_bad.divisor_ok);

    // Type 6: the twisted model contains (2,1) while the default does not.
    const SurfaceType t6{6};
    const auto m6 = enumerate_admissible_models(t6);
    REQUIRE(m6.size() == 2);
    CHECK_FALSE(divisor_in_l(m6[0], DivisorClass(t6, 2, 1)));
    CHECK(divisor_in_l(m6[1], DivisorClass(t6, 2, 1)));
  }

  TEST_CASE("membership is componentwise") {
    // v is special iff its rank part and its divisor part are special
    // separately; the Euler-characteristic coordinate is free.
    for (SurfaceType t : all_surface_types()) {
      for (const DeltaModel& m : enumerate_admissible_models(t)) {
        for (int r = -4; r <= 4; ++r)
          for (int x = -4; x <= 4; ++x)
            for (int y = -4; y <= 4; ++y) {
              const NumClass v(t, r, x, y, 3);
              const DeltaVerdict want{in_delta(m, NumClass(t, r, 0, 0, 0)),
                                      in_delta(m, NumClass(t, 0, x, y, 0))};
              const DeltaVerdict got = check_delta(m, v);
              CHECK(got.rank_ok == want.rank_ok);
              CHECK(got.divisor_ok == want.divisor_ok);
              CHECK(in_delta(m, v) == (want.rank_ok && want.divisor_ok));
              CHECK(in_delta(m, v) == in_delta(m, -v));
            }
      }
    }
  }

  TEST_CASE("basis spans exactly the special classes") {
    // Every integer combination of the basis is special, and membership of a
    // class implies an exact expansion in the basis (triangular solve).
    const SurfaceType t{2};
    const auto models = enumerate_admissible_models(t);
    const DeltaModel& twisted = models[1];
    const auto basis = delta_basis(twisted);
    CHECK(basis[0] == NumClass(t, 2, 0, 0, 0));
    CHECK(basis[1] == NumClass(t, 0, 2, 0, 0));
    CHECK(basis[2] == NumClass(t, 0, 1, 1, 0));
    CHECK(basis[3] == NumClass::p4(t));
    for (int c0 = -2; c0 <= 2; ++c0)
      for (int c1 = -2; c1 <= 2; ++c1)
        for (int c2 = -2; c2 <= 2; ++c2)
          for (int c3 = -2; c3 <= 2; ++c3) {
            const NumClass v = Int(c0) * basis[0] + Int(c1) * basis[1] + Int(c2) * basis[2] +
                               Int(c3) * basis[3];
            CHECK(in_delta(twisted, v));
          }
    CHECK_FALSE(in_delta(twisted, NumClass(t, 0, 1, 0, 0)));
    CHECK_FALSE(in_delta(twisted, NumClass(t, 1, 0, 0, 0)));
  }

  TEST_CASE("inadmissible models are rejected") {
    // c does not divide k (fiber class B missing).
    CHECK_THROWS_AS(DeltaModel(SurfaceType(1), 2, 0, 2), std::domain_error);
    // e1-axis section too big (a != n).
    CHECK_THROWS_AS(DeltaModel(SurfaceType(1), 4, 0, 1), std::domain_error);
    CHECK_THROWS_AS(DeltaModel(SurfaceType(1), 1, 0, 1), std::domain_error);
    // Not in Hermite form (b >= a, nonpositive diagonal).
    CHECK_THROWS_AS(DeltaModel(SurfaceType(1), 2, 2, 1), std::domain_error);
    CHECK_THROWS_AS(DeltaModel(SurfaceType(1), 2, -1, 1), std::domain_error);
    CHECK_THROWS_AS(DeltaModel(SurfaceType(1), 2, 0, 0), std::domain_error);
    // B not in the lattice: x = b*y/c fails mod a.
    CHECK_THROWS_AS(DeltaModel(SurfaceType(2), 2, 1, 2), std::domain_error);
    // e2-axis section too big on a non-split type.
    CHECK_THROWS_AS(DeltaModel(SurfaceType(4), 3, 0, 1), std::domain_error);
  }
}
