#include <algorithm>
#include <random>

#include "cgop/fincat.hpp"
#include "cgop/homology.hpp"
#include "doctest.h"

using namespace cgop;

namespace {

FinPoset chain_poset(int n) {
  FinPoset p;
  for (int i = 0; i < n; ++i) p.elems.push_back("c" + std::to_string(i));
  p.le.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p.le[i][j] = 1;
  return p;
}

FinPoset discrete_poset(int n) {
  FinPoset p;
  for (int i = 0; i < n; ++i) p.elems.push_back("d" + std::to_string(i));
  p.le.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) p.le[i][i] = 1;
  return p;
}

// random poset via random DAG edges + transitive closure
FinPoset random_poset(int n, std::mt19937_64& rng) {
  FinPoset p;
  for (int i = 0; i < n; ++i) p.elems.push_back("r" + std::to_string(i));
  p.le.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) p.le[i][i] = 1;
  std::uniform_int_distribution<int> coin(0, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) == 0) p.le[i][j] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (p.le[i][k] && p.le[k][j]) p.le[i][j] = 1;
  return p;
}

}  // namespace

TEST_CASE("poset validation accepts orders and rejects broken relations") {
  auto p = chain_poset(3);
  CHECK_NOTHROW(p.validate());
  p.le[2][0] = 1;  // breaks antisymmetry
  CHECK_THROWS(p.validate());
}

TEST_CASE("order complex of two incomparable points") {
  auto c = order_complex(discrete_poset(2));
  CHECK(c.rank(0) == 2);
  CHECK(c.rank(1) == 0);
  auto h = homology(c);
  CHECK(h[0].betti == 2);
}

TEST_CASE("order complex of a 3-chain is a filled triangle") {
  auto c = order_complex(chain_poset(3));
  CHECK(c.rank(0) == 3);
  CHECK(c.rank(1) == 3);
  CHECK(c.rank(2) == 1);
  CHECK(homology_is_contractible(homology(c)));
}

TEST_CASE("4-cycle has one loop") {
  // poset: two maximal elements over two minimal, crosswise (the circle)
  FinPoset p;
  p.elems = {"a", "b", "x", "y"};
  p.le.assign(4, std::vector<char>(4, 0));
  for (int i = 0; i < 4; ++i) p.le[i][i] = 1;
  p.le[0][2] = p.le[0][3] = p.le[1][2] = p.le[1][3] = 1;
  auto h = homology(order_complex(p));
  CHECK(h[0].betti == 1);
  CHECK(h[1].betti == 1);
  CHECK(h[1].torsion.empty());
}

TEST_CASE("nerve of one object with identity only") {
  CategoryBuilder b;
  b.add_object("*");
  b.build_composition([](const std::string&, const std::string&) { return ""; });
  auto cat = b.take();
  cat.validate();
  auto c = nerve_truncated(cat, 3);
  CHECK(c.rank(0) == 1);
  CHECK(c.rank(1) == 0);
  CHECK(homology_is_contractible(homology(c)));
}

TEST_CASE("nerve of two parallel arrows is a circle") {
  CategoryBuilder b;
  int x = b.add_object("x"), y = b.add_object("y");
  b.add_morphism("f", x, y);
  b.add_morphism("g", x, y);
  b.build_composition([](const std::string&, const std::string&) -> std::string {
    throw std::runtime_error("no composable non-identity pairs expected");
  });
  auto cat = b.take();
  cat.validate();
  auto c = nerve_truncated(cat, 4);
  CHECK(c.rank(0) == 2);
  CHECK(c.rank(1) == 2);
  CHECK(!c.truncated);  // no composable chains, the complex is complete
  auto h = homology(c);
  CHECK(h[0].betti == 1);
  CHECK(h[1].betti == 1);
}

TEST_CASE("terminal and initial detection") {
  auto p = chain_poset(4).to_category();
  p.validate();
  CHECK(p.terminal().has_value());
  CHECK(p.obj_names[*p.terminal()] == "c3");
  CHECK(p.initial().has_value());
  CHECK(p.obj_names[*p.initial()] == "c0");
  auto d = discrete_poset(2).to_category();
  CHECK(!d.terminal().has_value());
  CHECK(!d.initial().has_value());
}

TEST_CASE("components by zigzag") {
  auto d = discrete_poset(5).to_category();
  CHECK(d.num_components() == 5);
  CategoryBuilder b;
  int x = b.add_object("x"), y = b.add_object("y");
  b.add_object("z");
  b.add_morphism("f", x, y);
  b.add_morphism("g", x, y);
  b.build_composition([](const std::string&, const std::string&) { return ""; });
  auto cat = b.take();
  CHECK(cat.num_components() == 2);
}

TEST_CASE("cone oracle: posets with top or bottom are contractible both ways") {
  std::mt19937_64 rng(12345);
  int tested = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto p = random_poset(7, rng);
    if (!p.top().has_value() && !p.bottom().has_value()) continue;
    ++tested;
    CHECK(p.reduces_to_point());
    CHECK(homology_is_contractible(homology(order_complex(p))));
  }
  CHECK(tested > 3);
}

TEST_CASE("beat point reduction agrees with homology on random posets") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = random_poset(7, rng);
    bool by_beat = p.reduces_to_point();
    bool by_hom = homology_is_contractible(homology(order_complex(p)));
    if (by_beat) CHECK(by_hom);  // beat certificate is sound
  }
}

TEST_CASE("euler characteristic equals alternating betti sum on untruncated complexes") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_poset(6, rng);
    auto c = order_complex(p);
    auto h = homology(c);
    long long chi = 0;
    for (const auto& d : h) chi += (d.degree % 2 == 0 ? 1 : -1) * d.betti;
    CHECK(chi == c.euler_characteristic());
  }
}

TEST_CASE("slice and fiber of the identity functor") {
  auto cat = chain_poset(3).to_category();
  FinFunctor F;
  F.dom = &cat;
  F.cod = &cat;
  F.ob_map = {0, 1, 2};
  F.mor_map.resize(cat.num_morphisms());
  for (int f = 0; f < cat.num_morphisms(); ++f) F.mor_map[f] = f;
  auto r = slice_and_fiber(F, 0);
  // fiber over c0: just c0; slice 0/id: objects (x, 0 <= x), initial (c0, id)
  CHECK(r.fiber.num_objects() == 1);
  CHECK(r.slice.num_objects() == 3);
  auto init = r.slice.initial();
  REQUIRE(init.has_value());
  CHECK(r.slice_obj[*init].first == 0);
  r.inclusion.dom = &r.fiber;
  r.inclusion.cod = &r.slice;
  CHECK_NOTHROW(r.inclusion.validate());
}

TEST_CASE("fiber embeds faithfully into slice") {
  // functor: collapse a 2-chain onto one object inside a 2-object category
  CategoryBuilder cb;
  int a = cb.add_object("a"), b2 = cb.add_object("b");
  cb.add_morphism("u", a, b2);
  cb.build_composition([](const std::string&, const std::string&) { return ""; });
  auto C = cb.take();

  CategoryBuilder db;
  int z = db.add_object("z");
  db.build_composition([](const std::string&, const std::string&) { return ""; });
  auto D = db.take();

  FinFunctor F;
  F.dom = &C;
  F.cod = &D;
  F.ob_map = {z, z};
  F.mor_map.resize(C.num_morphisms(), D.identity_of[z]);
  auto r = slice_and_fiber(F, z);
  CHECK(r.fiber.num_objects() == 2);
  CHECK(r.slice.num_objects() == 2);
  r.inclusion.dom = &r.fiber;
  r.inclusion.cod = &r.slice;
  r.inclusion.validate();
  // injective on objects and morphisms
  std::vector<int> obs = r.inclusion.ob_map;
  std::sort(obs.begin(), obs.end());
  CHECK(std::adjacent_find(obs.begin(), obs.end()) == obs.end());
  std::vector<int> ms = r.inclusion.mor_map;
  std::sort(ms.begin(), ms.end());
  CHECK(std::adjacent_find(ms.begin(), ms.end()) == ms.end());
}

TEST_CASE("smith normal form finds torsion") {
  // boundary of the projective plane's standard 2-complex: matrix [[2]]
  auto d = smith_invariant_factors({{2}});
  REQUIRE(d.size() == 1);
  CHECK(d[0] == 2);
  auto e = smith_invariant_factors({{2, 4}, {4, 8}});
  REQUIRE(e.size() == 1);  // rank 1
  CHECK(e[0] == 2);
}
