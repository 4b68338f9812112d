#ifndef CGOP_CG_HPP
#define CGOP_CG_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cgop/fincat.hpp"
#include "cgop/perm.hpp"

namespace cgop {

/*
  Level assignment on the complete graph with k vertices: one level in
  {1..m} per unordered pair i<j, stored in lexicographic pair order.
*/
struct LevelMatrix {
  int k = 0;
  int m = 1;
  std::vector<int> lv;  // size k*(k-1)/2

  LevelMatrix() = default;
  LevelMatrix(int k_, int m_) : k(k_), m(m_), lv(k_ * (k_ - 1) / 2, 1) {}

  static int pair_index(int i, int j, int k);  // 0-based i<j
  int at(int i, int j) const;                  // unordered, 0-based
  void set(int i, int j, int v);

  std::string str() const;  // canonical id fragment
  friend bool operator==(const LevelMatrix& a, const LevelMatrix& b) {
    return a.k == b.k && a.m == b.m && a.lv == b.lv;
  }
  friend bool operator<(const LevelMatrix& a, const LevelMatrix& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.lv < b.lv;
  }
};

std::vector<LevelMatrix> all_level_matrices(int k, int m);

// Element of the complete graph operad in arity k: levels plus a permutation.
struct KmElement {
  LevelMatrix mu;
  Perm sigma;

  std::string str() const { return mu.str() + "|" + sigma.str(); }
  friend bool operator==(const KmElement& a, const KmElement& b) {
    return a.mu == b.mu && a.sigma == b.sigma;
  }
  friend bool operator<(const KmElement& a, const KmElement& b) {
    if (!(a.mu == b.mu)) return a.mu < b.mu;
    return a.sigma < b.sigma;
  }
};

// sgn of the relative order of i<j under sigma: +1 if preserved
inline int s_ij(const Perm& sigma, int i, int j) { return pair_sign(sigma, i, j); }

// (mu,sigma) <= (nu,tau) iff per pair the level strictly increases or the
// (level, orientation) data coincide
bool km_le(const KmElement& a, const KmElement& b);

// all m^(k choose 2) * k! elements; throws if the count exceeds the budget
FinPoset km_poset(int k, int m, long long budget = 2'000'000);
std::vector<KmElement> km_elements(int k, int m, long long budget = 2'000'000);

/*
  Morphism conditions on level data.  The two readings differ on pairs whose
  order is preserved: Decided asks mu_ij <= nu_(g i)(g j), Literal asks
  equality.  Pairs whose order is reversed require strict increase in both.
  Pairs merged by g carry no condition here.
*/
enum class Reading { Decided, Literal };
inline const char* reading_name(Reading r) { return r == Reading::Decided ? "decided" : "literal"; }

// condition on an arbitrary function g between index sets (cross pairs only)
bool level_condition(const LevelMatrix& mu, const LevelMatrix& nu, const std::vector<int>& g,
                     Reading reading);

// hom-set of the arity-k level category: permutations satisfying the
// level condition
std::vector<Perm> cg_hom(const LevelMatrix& mu, const LevelMatrix& nu, Reading reading);

// the groupoid-free category of level matrices in one arity; throws on
// composition non-closure (which the Literal reading exhibits)
FinCategory cg_category(int k, int m, Reading reading);

// operadic substitution on the level part
LevelMatrix substitute(const LevelMatrix& mu, const std::vector<LevelMatrix>& blocks);
// and on full elements, composing permutations operadically
KmElement substitute_km(const KmElement& a, const std::vector<KmElement>& blocks);

// right action of the symmetric group: relabel pairs and twist the permutation
KmElement km_act(const KmElement& a, const Perm& tau);

LevelMatrix cg_unit(int m);  // the arity-1 object
KmElement km_unit(int m);

struct AxiomReport {
  bool ok = true;
  long long cases = 0;
  std::string witness;  // first counterexample, if any
};

// associativity, unit laws and both equivariance laws for all substitution
// shapes with result arity <= K; optionally corrupt the cross-block rule to
// confirm the harness detects violations
AxiomReport check_operad_axioms(int m, int K, bool corrupt_cross_block = false);

}  // namespace cgop

#endif
