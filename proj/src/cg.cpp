#include "cgop/cg.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgop {

int LevelMatrix::pair_index(int i, int j, int k) {
  if (i > j) std::swap(i, j);
  // pairs (0,1),(0,2),...,(0,k-1),(1,2),...
  return i * k - i * (i + 1) / 2 + (j - i - 1);
}

int LevelMatrix::at(int i, int j) const {
  if (i == j) throw std::invalid_argument("LevelMatrix::at: i == j");
  return lv[pair_index(i, j, k)];
}

void LevelMatrix::set(int i, int j, int v) {
  if (v < 1 || v > m) throw std::invalid_argument("LevelMatrix::set: level out of range");
  lv[pair_index(i, j, k)] = v;
}

std::string LevelMatrix::str() const {
  std::string s = "k" + std::to_string(k) + "[";
  for (size_t q = 0; q < lv.size(); ++q) {
    if (q) s += ",";
    s += std::to_string(lv[q]);
  }
  return s + "]";
}

std::vector<LevelMatrix> all_level_matrices(int k, int m) {
  std::vector<LevelMatrix> out;
  int pairs = k * (k - 1) / 2;
  LevelMatrix cur(k, m);
  std::function<void(int)> rec = [&](int q) {
    if (q == pairs) { out.push_back(cur); return; }
    for (int v = 1; v <= m; ++v) {
      cur.lv[q] = v;
      rec(q + 1);
    }
  };
  rec(0);
  return out;
}

bool km_le(const KmElement& a, const KmElement& b) {
  if (a.mu.k != b.mu.k || a.mu.m != b.mu.m)
    throw std::invalid_argument("km_le: arity or ambient mismatch");
  int k = a.mu.k;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int la = a.mu.at(i, j), lb = b.mu.at(i, j);
      if (la < lb) continue;
      if (la == lb && s_ij(a.sigma, i, j) == s_ij(b.sigma, i, j)) continue;
      return false;
    }
  return true;
}

std::vector<KmElement> km_elements(int k, int m, long long budget) {
  long long fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  long long total = fact;
  for (int q = 0; q < k * (k - 1) / 2; ++q) {
    total *= m;
    if (total > budget) throw std::runtime_error("km_elements: enumeration budget exceeded");
  }
  std::vector<KmElement> out;
  auto levels = all_level_matrices(k, m);
  auto perms = all_perms(k);
  for (const auto& mu : levels)
    for (const auto& s : perms) out.push_back({mu, s});
  return out;
}

FinPoset km_poset(int k, int m, long long budget) {
  auto elems = km_elements(k, m, budget);
  FinPoset p;
  for (const auto& e : elems) p.elems.push_back(e.str());
  int n = static_cast<int>(elems.size());
  p.le.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p.le[i][j] = km_le(elems[i], elems[j]) ? 1 : 0;
  return p;
}

bool level_condition(const LevelMatrix& mu, const LevelMatrix& nu, const std::vector<int>& g,
                     Reading reading) {
  for (int i = 0; i < mu.k; ++i)
    for (int j = i + 1; j < mu.k; ++j) {
      if (g[i] == g[j]) continue;
      int target = nu.at(g[i], g[j]);
      int source = mu.at(i, j);
      if (g[i] < g[j]) {
        if (reading == Reading::Decided ? source > target : source != target) return false;
      } else {
        if (source >= target) return false;
      }
    }
  return true;
}

std::vector<Perm> cg_hom(const LevelMatrix& mu, const LevelMatrix& nu, Reading reading) {
  if (mu.k != nu.k || mu.m != nu.m) throw std::invalid_argument("cg_hom: arity mismatch");
  std::vector<Perm> out;
  for (const auto& s : all_perms(mu.k))
    if (level_condition(mu, nu, s.v, reading)) out.push_back(s);
  return out;
}

FinCategory cg_category(int k, int m, Reading reading) {
  auto objs = all_level_matrices(k, m);
  CategoryBuilder b;
  for (const auto& o : objs) b.add_object(o.str());
  for (size_t i = 0; i < objs.size(); ++i)
    for (size_t j = 0; j < objs.size(); ++j)
      for (const auto& s : cg_hom(objs[i], objs[j], reading)) {
        if (i == j && s.is_identity()) continue;
        b.add_morphism(objs[i].str() + "-" + s.str() + "->" + objs[j].str(),
                       static_cast<int>(i), static_cast<int>(j));
      }
  // composite of sigma then tau is tau.sigma
  auto& cat = b.cat;
  auto out = cat.out_lists();
  auto parse_perm = [&](const std::string& name) {
    // name: src-"(a b c)"->dst
    auto l = name.find("-("), r = name.find(")->");
    std::string body = name.substr(l + 2, r - l - 2);
    std::vector<int> v;
    size_t pos = 0;
    while (pos < body.size()) {
      size_t sp = body.find(' ', pos);
      std::string tok = body.substr(pos, sp == std::string::npos ? std::string::npos : sp - pos);
      v.push_back(std::stoi(tok) - 1);
      if (sp == std::string::npos) break;
      pos = sp + 1;
    }
    return Perm(v);
  };
  for (int f = 0; f < cat.num_morphisms(); ++f)
    for (int g : out[cat.mors[f].dst]) {
      if (cat.is_identity(f)) { cat.set_compose(f, g, g); continue; }
      if (cat.is_identity(g)) { cat.set_compose(f, g, f); continue; }
      Perm sf = parse_perm(cat.mors[f].name);
      Perm sg = parse_perm(cat.mors[g].name);
      Perm c = sg.after(sf);
      int src = cat.mors[f].src, dst = cat.mors[g].dst;
      std::string nm = (src == dst && c.is_identity())
                           ? cat.mors[cat.identity_of[src]].name
                           : objs[src].str() + "-" + c.str() + "->" + objs[dst].str();
      if (!b.has_morphism(nm))
        throw std::runtime_error("cg_category: composition not closed: " + cat.mors[f].name +
                                 " then " + cat.mors[g].name + " needs " + nm);
      cat.set_compose(f, g, b.morphism(nm));
    }
  auto result = b.take();
  result.validate();
  return result;
}

LevelMatrix substitute(const LevelMatrix& mu, const std::vector<LevelMatrix>& blocks) {
  if (static_cast<int>(blocks.size()) != mu.k)
    throw std::invalid_argument("substitute: block count mismatch");
  int N = 0;
  std::vector<int> start(mu.k), owner;
  for (int s = 0; s < mu.k; ++s) {
    if (blocks[s].m != mu.m) throw std::invalid_argument("substitute: ambient mismatch");
    start[s] = N;
    N += blocks[s].k;
    for (int p = 0; p < blocks[s].k; ++p) owner.push_back(s);
  }
  LevelMatrix out(N, mu.m);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      int si = owner[i], sj = owner[j];
      if (si == sj)
        out.set(i, j, blocks[si].at(i - start[si], j - start[si]));
      else
        out.set(i, j, mu.at(si, sj));
    }
  return out;
}

KmElement substitute_km(const KmElement& a, const std::vector<KmElement>& blocks) {
  std::vector<LevelMatrix> lvs;
  std::vector<Perm> ps;
  for (const auto& b : blocks) {
    lvs.push_back(b.mu);
    ps.push_back(b.sigma);
  }
  return {substitute(a.mu, lvs), perm_substitute(a.sigma, ps)};
}

KmElement km_act(const KmElement& a, const Perm& tau) {
  KmElement r;
  r.mu = LevelMatrix(a.mu.k, a.mu.m);
  for (int i = 0; i < a.mu.k; ++i)
    for (int j = i + 1; j < a.mu.k; ++j) r.mu.set(i, j, a.mu.at(tau(i), tau(j)));
  r.sigma = a.sigma.after(tau);
  return r;
}

LevelMatrix cg_unit(int m) { return LevelMatrix(1, m); }
KmElement km_unit(int m) { return {cg_unit(m), Perm(1)}; }

namespace {

// substitution with an optional corruption of the cross-block rule
LevelMatrix substitute_maybe_corrupt(const LevelMatrix& mu, const std::vector<LevelMatrix>& blocks,
                                     bool corrupt) {
  LevelMatrix r = substitute(mu, blocks);
  if (corrupt && !r.lv.empty() && mu.k >= 2 && blocks[0].k >= 1 && r.k >= 2) {
    // overwrite one cross-block level with an off-by-one value
    int N = r.k;
    std::vector<int> owner;
    for (int s = 0; s < mu.k; ++s)
      for (int p = 0; p < blocks[s].k; ++p) owner.push_back(s);
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j)
        if (owner[i] != owner[j]) {
          int v = r.at(i, j);
          r.set(i, j, v == r.m ? 1 : v + 1);
          return r;
        }
  }
  return r;
}

// all compositions (n_1..n_k), n_i >= 0, sum <= total
void arity_shapes(int k, int total, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(k, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == k) { out.push_back(cur); return; }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, total);
}

}  // namespace

AxiomReport check_operad_axioms(int m, int K, bool corrupt_cross_block) {
  AxiomReport rep;
  auto fail = [&](const std::string& w) {
    if (rep.ok) { rep.ok = false; rep.witness = w; }
  };
  auto subst = [&](const KmElement& a, const std::vector<KmElement>& blocks) {
    std::vector<LevelMatrix> lvs;
    std::vector<Perm> ps;
    for (const auto& b : blocks) { lvs.push_back(b.mu); ps.push_back(b.sigma); }
    return KmElement{substitute_maybe_corrupt(a.mu, lvs, corrupt_cross_block),
                     perm_substitute(a.sigma, ps)};
  };

  std::vector<std::vector<KmElement>> elems(K + 1);
  for (int k = 0; k <= K; ++k) elems[k] = km_elements(k, m);

  // unit laws
  for (int k = 0; k <= K && rep.ok; ++k)
    for (const auto& a : elems[k]) {
      std::vector<KmElement> units(k, km_unit(m));
      ++rep.cases;
      if (!(subst(a, units) == a)) { fail("unit law (right) at " + a.str()); break; }
      ++rep.cases;
      if (!(subst(km_unit(m), {a}) == a)) { fail("unit law (left) at " + a.str()); break; }
    }

  // associativity over all shapes: outer k, middle (n_1..n_k), inner (p_1..p_N)
  for (int k = 0; k <= K && rep.ok; ++k) {
    std::vector<std::vector<int>> mids;
    arity_shapes(k, K, mids);
    for (const auto& mid : mids) {
      int N = 0;
      for (int v : mid) N += v;
      std::vector<std::vector<int>> inners;
      arity_shapes(N, K, inners);
      for (const auto& inner : inners) {
        if (!rep.ok) break;
        // sweep elements
        std::function<void(int, std::vector<KmElement>&)> sweep_mid;
        for (const auto& a : elems[k]) {
          if (!rep.ok) break;
          // enumerate b-tuples
          std::vector<KmElement> bs(k);
          std::function<void(int)> rec_b = [&](int pos) {
            if (!rep.ok) return;
            if (pos == k) {
              std::vector<KmElement> cs(N);
              std::function<void(int)> rec_c = [&](int q) {
                if (!rep.ok) return;
                if (q == N) {
                  // gamma(gamma(a;b);c) vs gamma(a; gamma(b_s; c-slice))
                  KmElement ab = subst(a, bs);
                  KmElement lhs = subst(ab, cs);
                  std::vector<KmElement> bc(k);
                  int off = 0;
                  for (int s = 0; s < k; ++s) {
                    std::vector<KmElement> slice(cs.begin() + off, cs.begin() + off + mid[s]);
                    bc[s] = subst(bs[s], slice);
                    off += mid[s];
                  }
                  KmElement rhs = subst(a, bc);
                  ++rep.cases;
                  if (!(lhs == rhs))
                    fail("associativity at a=" + a.str() + " shape k=" + std::to_string(k));
                  return;
                }
                for (const auto& c : elems[inner[q]]) {
                  cs[q] = c;
                  rec_c(q + 1);
                  if (!rep.ok) return;
                }
              };
              rec_c(0);
              return;
            }
            for (const auto& b : elems[mid[pos]]) {
              bs[pos] = b;
              rec_b(pos + 1);
              if (!rep.ok) return;
            }
          };
          rec_b(0);
        }
      }
    }
  }

  // equivariance law 1: gamma(a.tau; b_1..b_k) = gamma(a; b_{tau^-1(1)}..).block_perm
  for (int k = 1; k <= K && rep.ok; ++k) {
    std::vector<std::vector<int>> mids;
    arity_shapes(k, K, mids);
    for (const auto& mid : mids) {
      for (const auto& a : elems[k]) {
        if (!rep.ok) break;
        for (const auto& tau : all_perms(k)) {
          std::vector<KmElement> bs(k);
          std::function<void(int)> rec_b = [&](int pos) {
            if (!rep.ok) return;
            if (pos == k) {
              KmElement lhs = subst(km_act(a, tau), bs);
              std::vector<KmElement> bperm(k);
              std::vector<int> sizes(k);
              for (int s = 0; s < k; ++s) bperm[s] = bs[tau.inverse()(s)];
              // block permutation of tau moving the blocks in their original
              // sizes into the permuted arrangement
              for (int s = 0; s < k; ++s) sizes[s] = bs[s].mu.k;
              KmElement base = subst(a, bperm);
              KmElement rhs = km_act(base, block_perm(tau, sizes));
              ++rep.cases;
              if (!(lhs == rhs)) fail("equivariance (outer) at a=" + a.str() + " tau=" + tau.str());
              return;
            }
            for (const auto& b : elems[mid[pos]]) {
              bs[pos] = b;
              rec_b(pos + 1);
              if (!rep.ok) return;
            }
          };
          rec_b(0);
          if (!rep.ok) break;
        }
      }
    }
  }

  // equivariance law 2: gamma(a; b_1.tau_1..b_k.tau_k) = gamma(a;b).direct_sum(tau)
  for (int k = 1; k <= K && rep.ok; ++k) {
    std::vector<std::vector<int>> mids;
    arity_shapes(k, K, mids);
    for (const auto& mid : mids) {
      for (const auto& a : elems[k]) {
        if (!rep.ok) break;
        std::vector<KmElement> bs(k);
        std::function<void(int)> rec_b = [&](int pos) {
          if (!rep.ok) return;
          if (pos == k) {
            // one non-identity tau per block in turn keeps the sweep affordable
            for (int s = 0; s < k && rep.ok; ++s) {
              for (const auto& tau : all_perms(mid[s])) {
                std::vector<KmElement> twisted = bs;
                twisted[s] = km_act(bs[s], tau);
                std::vector<Perm> parts;
                for (int u = 0; u < k; ++u)
                  parts.push_back(u == s ? tau : Perm(mid[u]));
                KmElement lhs = subst(a, twisted);
                KmElement rhs = km_act(subst(a, bs), direct_sum(parts));
                ++rep.cases;
                if (!(lhs == rhs)) {
                  fail("equivariance (inner) at a=" + a.str());
                  break;
                }
              }
            }
            return;
          }
          for (const auto& b : elems[mid[pos]]) {
            bs[pos] = b;
            rec_b(pos + 1);
            if (!rep.ok) return;
          }
        };
        rec_b(0);
      }
    }
  }

  // functoriality in the poset order: if a <= a' and blocks <= blocks',
  // then the substitutes compare (sampled inside the same sweep budget)
  for (int k = 1; k <= 2 && rep.ok; ++k) {
    std::vector<std::vector<int>> mids;
    arity_shapes(k, std::min(K, 3), mids);
    for (const auto& mid : mids)
      for (const auto& a : elems[k])
        for (const auto& a2 : elems[k]) {
          if (!km_le(a, a2)) continue;
          std::vector<KmElement> bs(k), bs2(k);
          std::function<void(int)> rec = [&](int pos) {
            if (!rep.ok) return;
            if (pos == k) {
              ++rep.cases;
              if (!km_le(subst(a, bs), subst(a2, bs2)))
                fail("substitution not monotone at " + a.str() + " <= " + a2.str());
              return;
            }
            for (const auto& b : elems[mid[pos]])
              for (const auto& b2 : elems[mid[pos]]) {
                if (!km_le(b, b2)) continue;
                bs[pos] = b;
                bs2[pos] = b2;
                rec(pos + 1);
                if (!rep.ok) return;
              }
          };
          rec(0);
          if (!rep.ok) break;
        }
  }

  return rep;
}

}  // namespace cgop
