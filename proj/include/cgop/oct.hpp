#ifndef CGOP_OCT_HPP
#define CGOP_OCT_HPP

#include <optional>
#include <string>
#include <vector>

#include "cgop/rational.hpp"

namespace cgop {

struct FinPoset;

/*
  The colour poset on 2m+1 elements: signed levels (e,l) with e in {-1,+1}
  and 1 <= l <= m, plus a top element t = (0, m+1).  Two elements compare
  iff they are equal or the levels compare strictly.

  For m = 2 the letters A,B,C,D,E name (-1,1),(1,1),(-1,2),(1,2),(0,3).
*/
struct OctElement {
  int sign = 0;   // -1, 0, +1
  int level = 1;  // 1..m+1

  friend bool operator==(const OctElement& a, const OctElement& b) {
    return a.sign == b.sign && a.level == b.level;
  }
  friend bool operator!=(const OctElement& a, const OctElement& b) { return !(a == b); }
  friend bool operator<(const OctElement& a, const OctElement& b) {
    return a.level != b.level ? a.level < b.level : a.sign < b.sign;
  }
  std::string str() const;
};

inline OctElement oct_top(int m) { return OctElement{0, m + 1}; }

bool oct_valid(const OctElement& a, int m);

// a <= b iff a == b or level(a) < level(b); throws on invalid input
bool oct_le(const OctElement& a, const OctElement& b, int m);

// All 2m+1 elements, sorted by (level, sign).
std::vector<OctElement> oct_elements(int m);

FinPoset oct_poset(int m);
FinPoset sphere_poset(int m);

// Letter aliases for m = 2 (A..E); general syntax "s:l" e.g. "-1:2".
std::string oct_name(const OctElement& a, int m);
std::optional<OctElement> oct_parse(const std::string& s, int m);

// ---------------------------------------------------------------------------
// Geometric dictionary inside the open unit cube, midline x = 1/2 per axis.
// V(l): coordinates 1..l-1 equal the midline.  H(e,l): inside V(l)'s ambient,
// the open half e*(x_l - 1/2) > 0.

struct Box {
  std::vector<Rat> lo, hi;  // open box, lo < hi per axis
  int dim() const { return static_cast<int>(lo.size()); }
  Rat centre(int axis) const;  // 0-based axis
  bool valid_in_unit_cube() const;
};

bool point_in_V(const std::vector<Rat>& x, int l);
// closure of the box is required to lie in the open half-space
bool cube_in_H(const Box& b, int eps, int l);

inline Rat half() { return Rat(1, 2); }

}  // namespace cgop

#endif
