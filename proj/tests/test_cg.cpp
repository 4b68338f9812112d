#include <random>
#include <set>

#include "cgop/cg.hpp"
#include "cgop/homology.hpp"
#include "doctest.h"

using namespace cgop;

TEST_CASE("pair indexing is lexicographic") {
  LevelMatrix mu(4, 3);
  int q = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(LevelMatrix::pair_index(i, j, 4) == q++);
  CHECK(q == 6);
  mu.set(1, 3, 2);
  CHECK(mu.at(3, 1) == 2);
}

TEST_CASE("km_le basics") {
  int m = 2;
  KmElement a{LevelMatrix(2, m), Perm(2)};
  CHECK(km_le(a, a));
  KmElement b{LevelMatrix(2, m), Perm({1, 0})};
  CHECK(!km_le(a, b));  // equal levels, different orientation
  KmElement c{LevelMatrix(2, m), Perm({1, 0})};
  c.mu.set(0, 1, 2);
  CHECK(km_le(a, c));  // strict level increase beats orientation
  CHECK(km_le(b, c));
}

TEST_CASE("km_poset sizes and k=2 structure") {
  CHECK(km_poset(0, 2).size() == 1);
  CHECK(km_poset(1, 3).size() == 1);
  auto p = km_poset(2, 2);
  CHECK(p.size() == 4);
  CHECK_NOTHROW(p.validate());
  // relations: (1,rho) < (2,pi) for all rho, pi; nothing else besides reflexivity
  int strict = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && p.le[i][j]) ++strict;
  CHECK(strict == 4);
  CHECK_THROWS(km_poset(5, 3, 1000));  // budget exceeded
}

TEST_CASE("km_poset order complex is a sphere for k=2") {
  // {1..m} x Sigma_2 ordered by strict level increase: join of m copies of S^0
  for (int m = 1; m <= 4; ++m) {
    auto h = homology(order_complex(km_poset(2, m)));
    if (m == 1) {
      CHECK(h[0].betti == 2);
    } else {
      CHECK(h[0].betti == 1);
      for (int d = 1; d < m - 1; ++d) CHECK(h[d].betti == 0);
      CHECK(h[m - 1].betti == 1);
      CHECK(h[m - 1].torsion.empty());
    }
  }
}

TEST_CASE("cg_hom under the decided reading") {
  int m = 2;
  LevelMatrix one(2, m), two(2, m);
  two.set(0, 1, 2);
  auto h12 = cg_hom(one, two, Reading::Decided);
  CHECK(h12.size() == 2);  // id and swap
  auto h21 = cg_hom(two, one, Reading::Decided);
  CHECK(h21.empty());
  auto h11 = cg_hom(one, one, Reading::Decided);
  REQUIRE(h11.size() == 1);
  CHECK(h11[0].is_identity());
}

TEST_CASE("identity is the only endomorphism, brute force to arity 4") {
  for (int m = 1; m <= 2; ++m)
    for (int k = 0; k <= 4; ++k)
      for (const auto& mu : all_level_matrices(k, m)) {
        auto h = cg_hom(mu, mu, Reading::Decided);
        REQUIRE(h.size() == 1);
        CHECK(h[0].is_identity());
      }
}

TEST_CASE("literal reading breaks composition closure at m>=3") {
  CHECK_NOTHROW(cg_category(2, 2, Reading::Decided));
  CHECK_NOTHROW(cg_category(2, 2, Reading::Literal));  // no composable non-identity pairs
  CHECK_NOTHROW(cg_category(2, 3, Reading::Decided));
  CHECK_THROWS(cg_category(2, 3, Reading::Literal));  // swap;swap = id is missing
}

TEST_CASE("cg_hom closure under composition") {
  // exhaustive at k <= 3, m <= 2
  for (int m = 1; m <= 2; ++m)
    for (int k = 2; k <= 3; ++k) {
      auto objs = all_level_matrices(k, m);
      for (const auto& mu : objs)
        for (const auto& nu : objs)
          for (const auto& s : cg_hom(mu, nu, Reading::Decided))
            for (const auto& rho : objs)
              for (const auto& t : cg_hom(nu, rho, Reading::Decided)) {
                Perm c = t.after(s);
                bool found = false;
                for (const auto& u : cg_hom(mu, rho, Reading::Decided))
                  if (u == c) found = true;
                CHECK(found);
              }
    }
  // randomized at k = 4, m = 3
  std::mt19937_64 rng(99);
  auto objs = all_level_matrices(4, 3);
  std::uniform_int_distribution<size_t> pick(0, objs.size() - 1);
  int done = 0;
  while (done < 2000) {
    const auto& mu = objs[pick(rng)];
    const auto& nu = objs[pick(rng)];
    const auto& rho = objs[pick(rng)];
    auto h1 = cg_hom(mu, nu, Reading::Decided);
    auto h2 = cg_hom(nu, rho, Reading::Decided);
    if (h1.empty() || h2.empty()) continue;
    auto h3 = cg_hom(mu, rho, Reading::Decided);
    for (const auto& s : h1)
      for (const auto& t : h2) {
        Perm c = t.after(s);
        bool found = false;
        for (const auto& u : h3)
          if (u == c) found = true;
        CHECK(found);
      }
    ++done;
  }
}

TEST_CASE("nerve of the arity-2 level category models real projective space") {
  // m = 2: circle; m = 3: torsion Z/2 in degree 1
  auto c2 = cg_category(2, 2, Reading::Decided);
  auto n2 = nerve_truncated(c2, 6);
  auto h2 = homology(n2);
  CHECK(h2[0].betti == 1);
  CHECK(h2[1].betti == 1);
  CHECK(h2[1].torsion.empty());

  auto c3 = cg_category(2, 3, Reading::Decided);
  auto n3 = nerve_truncated(c3, 6);
  auto h3 = homology(n3);
  CHECK(h3[0].betti == 1);
  CHECK(h3[1].betti == 0);
  REQUIRE(h3[1].torsion.size() == 1);
  CHECK(h3[1].torsion[0] == 2);
  CHECK(h3[2].betti == 0);
  CHECK(h3[2].torsion.empty());
}

TEST_CASE("substitution: frozen example") {
  int m = 2;
  LevelMatrix mu(2, m);
  mu.set(0, 1, 2);
  LevelMatrix nu1(2, m);  // levels 1
  LevelMatrix nu2(1, m);
  auto rho = substitute(mu, {nu1, nu2});
  CHECK(rho.k == 3);
  CHECK(rho.at(0, 1) == 1);  // same block
  CHECK(rho.at(0, 2) == 2);  // cross block
  CHECK(rho.at(1, 2) == 2);
}

TEST_CASE("substitution unit laws") {
  int m = 2;
  for (const auto& mu : all_level_matrices(3, m)) {
    std::vector<LevelMatrix> units(3, cg_unit(m));
    CHECK(substitute(mu, units) == mu);
    CHECK(substitute(cg_unit(m), {mu}) == mu);
  }
}

TEST_CASE("operad axioms pass for small arity") {
  auto r1 = check_operad_axioms(1, 3);
  CHECK(r1.ok);
  CHECK(r1.cases > 0);
  auto r2 = check_operad_axioms(2, 3);
  CHECK(r2.ok);
}

TEST_CASE("corrupted cross-block rule is detected") {
  auto r = check_operad_axioms(2, 3, true);
  CHECK(!r.ok);
  CHECK(!r.witness.empty());
}

TEST_CASE("substitution is monotone") {
  std::mt19937_64 rng(5);
  auto outer = km_elements(2, 2);
  auto inner = km_elements(2, 2);
  for (const auto& a : outer)
    for (const auto& a2 : outer) {
      if (!km_le(a, a2)) continue;
      for (const auto& b : inner)
        for (const auto& b2 : inner) {
          if (!km_le(b, b2)) continue;
          auto u = km_unit(2);
          CHECK(km_le(substitute_km(a, {b, u}), substitute_km(a2, {b2, u})));
        }
    }
}
