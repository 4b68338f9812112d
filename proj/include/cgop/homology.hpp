#ifndef CGOP_HOMOLOGY_HPP
#define CGOP_HOMOLOGY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cgop/fincat.hpp"

namespace cgop {

/*
  Integer chain complex with explicit boundary matrices.  basis[d] names the
  nondegenerate d-simplices; boundary[d] is the matrix C_d -> C_{d-1} (one
  column per d-simplex).  When truncated, simplices above dim_bound were not
  enumerated and homology is only trustworthy in degrees < dim_bound.
*/
struct ChainComplex {
  int dim_bound = 0;
  bool truncated = false;
  std::vector<std::vector<std::string>> basis;                // per degree
  std::vector<std::vector<std::vector<std::int64_t>>> boundary;  // boundary[d]: rows=C_{d-1}, cols=C_d

  int rank(int d) const {
    if (d < 0 || d >= static_cast<int>(basis.size())) return 0;
    return static_cast<int>(basis[d].size());
  }
  void validate_dd_zero() const;  // boundary o boundary == 0, exact
  long long euler_characteristic() const;
};

struct DegreeHomology {
  int degree = 0;
  long long betti = 0;
  std::vector<long long> torsion;  // invariant factors > 1
  bool known = true;               // false above the truncation bound
};

// Smith-normal-form reduction over Z with 64-bit entries; throws
// std::overflow_error if intermediate values leave the 64-bit range.
std::vector<long long> smith_invariant_factors(std::vector<std::vector<std::int64_t>> mat);

std::vector<DegreeHomology> homology(const ChainComplex& c);

// reduced homology trivial in all known degrees (and nothing unknown below top)
bool homology_is_contractible(const std::vector<DegreeHomology>& h);

// strictly increasing chains of a poset; untruncated
ChainComplex order_complex(const FinPoset& p);

// chains of composable non-identity morphisms up to dimension D
ChainComplex nerve_truncated(const FinCategory& c, int D);

// beat-point core first, homology of the core as fallback
bool poset_contractible(const FinPoset& p);

std::string homology_str(const std::vector<DegreeHomology>& h);

}  // namespace cgop

#endif
