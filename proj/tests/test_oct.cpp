#include "cgop/homology.hpp"
#include "cgop/oct.hpp"
#include "doctest.h"

using namespace cgop;

TEST_CASE("colour poset order") {
  int m = 2;
  OctElement A{-1, 1}, B{1, 1}, C{-1, 2}, D{1, 2}, E{0, 3};
  CHECK(oct_le(A, E, m));
  CHECK(oct_le(A, C, m));
  CHECK(!oct_le(D, C, m));  // equal levels, distinct
  CHECK(!oct_le(B, A, m));
  CHECK(oct_le(D, D, m));
  CHECK(!oct_le(E, A, m));
  CHECK_THROWS(oct_le(OctElement{0, 1}, A, m));  // sign 0 only at top level
  CHECK_THROWS(oct_le(OctElement{1, 3}, A, m));  // level out of range
}

TEST_CASE("poset sizes and top") {
  for (int m = 0; m <= 4; ++m) {
    auto p = oct_poset(m);
    CHECK(p.size() == 2 * m + 1);
    CHECK_NOTHROW(p.validate());
    REQUIRE(p.top().has_value());
    CHECK(p.elems[*p.top()] == oct_name(oct_top(m), m));
    auto s = sphere_poset(m);
    CHECK(s.size() == 2 * m);
    CHECK_NOTHROW(s.validate());
  }
  CHECK(oct_poset(3).size() == 7);
  CHECK(sphere_poset(0).size() == 0);
}

TEST_CASE("m=2 letters") {
  CHECK(oct_name(OctElement{-1, 1}, 2) == "A");
  CHECK(oct_name(OctElement{0, 3}, 2) == "E");
  CHECK(oct_parse("C", 2).value() == OctElement{-1, 2});
  CHECK(oct_parse("-1:2", 3).value() == OctElement{-1, 2});
  CHECK(!oct_parse("E", 3).has_value());  // letters are an m=2 convention
  CHECK(!oct_parse("0:2", 2).has_value());
}

TEST_CASE("sphere poset order complexes are spheres") {
  // boundary of the m-cross-polytope: reduced homology of S^(m-1)
  auto s1 = sphere_poset(1);
  auto h1 = homology(order_complex(s1));
  CHECK(h1[0].betti == 2);  // two points

  auto s2 = sphere_poset(2);
  auto c2 = order_complex(s2);
  CHECK(c2.rank(0) == 4);
  CHECK(c2.rank(1) == 4);
  CHECK(c2.rank(2) == 0);
  auto h2 = homology(c2);
  CHECK(h2[0].betti == 1);
  CHECK(h2[1].betti == 1);
  CHECK(h2[1].torsion.empty());

  auto h3 = homology(order_complex(sphere_poset(3)));
  CHECK(h3[0].betti == 1);
  CHECK(h3[1].betti == 0);
  CHECK(h3[2].betti == 1);
  CHECK(h3[2].torsion.empty());
}

TEST_CASE("colour poset is contractible for small m") {
  for (int m = 1; m <= 6; ++m) {
    auto p = oct_poset(m);
    CHECK(p.reduces_to_point());
    if (m <= 4) CHECK(homology_is_contractible(homology(order_complex(p))));
  }
}

TEST_CASE("V and H membership") {
  using R = Rat;
  std::vector<R> origin{R(1, 2), R(1, 2)};
  CHECK(point_in_V(origin, 1));
  CHECK(point_in_V(origin, 2));
  CHECK(point_in_V(origin, 3));
  std::vector<R> off{R(1, 3), R(1, 2)};
  CHECK(point_in_V(off, 1));
  CHECK(!point_in_V(off, 2));

  Box b1{{R(1, 10), R(1, 10)}, {R(3, 10), R(3, 10)}};  // strictly negative side
  CHECK(cube_in_H(b1, -1, 1));
  CHECK(!cube_in_H(b1, 1, 1));
  Box b2{{R(6, 10), R(1, 10)}, {R(7, 10), R(3, 10)}};
  CHECK(cube_in_H(b2, 1, 1));
  Box straddle{{R(4, 10), R(1, 10)}, {R(6, 10), R(3, 10)}};
  CHECK(!cube_in_H(straddle, 1, 1));
  CHECK(!cube_in_H(straddle, -1, 1));
  // touching the midline fails the closed-containment test
  Box touch{{R(1, 2), R(1, 10)}, {R(7, 10), R(3, 10)}};
  CHECK(!cube_in_H(touch, 1, 1));
}

TEST_CASE("rational arithmetic is exact") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK(a - b == Rat(1, 6));
  CHECK(a * b == Rat(1, 18));
  CHECK(a / b == Rat(2));
  CHECK(Rat::parse("-3/6") == Rat(-1, 2));
  CHECK(Rat(2, 4).str() == "1/2");
  CHECK(Rat(1, 3) < Rat(1, 2));
}
