#ifndef CGOP_COLOURED_HPP
#define CGOP_COLOURED_HPP

#include <string>
#include <vector>

#include "cgop/cg.hpp"
#include "cgop/oct.hpp"

namespace cgop {

/*
  Level matrix with a colour on each input and on the output.  The ambient
  colour poset is the one of levels 1..m plus top; membership predicates for
  the various operation classes live below.
*/
struct ColouredObject {
  LevelMatrix mu;
  std::vector<OctElement> src;
  OctElement tgt;

  int arity() const { return mu.k; }
  int ambient() const { return mu.m; }
  std::string str() const;
  friend bool operator==(const ColouredObject& a, const ColouredObject& b) {
    return a.mu == b.mu && a.src == b.src && a.tgt == b.tgt;
  }
  friend bool operator<(const ColouredObject& a, const ColouredObject& b) {
    if (!(a.mu == b.mu)) return a.mu < b.mu;
    if (a.src != b.src) return a.src < b.src;
    return a.tgt < b.tgt;
  }
};

struct ColouredKmOp {
  ColouredObject obj;
  Perm sigma;
};

// every source colour below the target colour
bool in_ccg(const ColouredObject& x);

// additionally, per pair i<j: c_i <= (-1, mu_ij) or c_j <= (+1, mu_ij)
bool in_pcg(const ColouredObject& x);

// signed pair condition, the orientation taken from the permutation
bool in_fivedots_op(const ColouredKmOp& x);

// pair-condition class with a unique top-coloured source when the target is top
bool in_ucg(const ColouredObject& x);
// target equal to top forces arity one with the single source top
bool in_scg(const ColouredObject& x);

// restriction to an increasing index subset; target kept
ColouredObject restrict_to(const ColouredObject& x, const std::vector<int>& subset);
// same, substituting a different target colour
ColouredObject restrict_to(const ColouredObject& x, const std::vector<int>& subset,
                           const OctElement& new_target);

// colour-compatible hom-set: level condition plus exact colour transport
std::vector<Perm> ccg_hom(const ColouredObject& x, const ColouredObject& y, Reading reading);

// enumeration helpers
std::vector<ColouredObject> all_ccg_objects(int k, int m);
std::vector<std::vector<OctElement>> all_colourings_below(const OctElement& c, int k, int m);

}  // namespace cgop

#endif
