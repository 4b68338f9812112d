#include "cgop/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cgop {

void ChainComplex::validate_dd_zero() const {
  for (int d = 2; d < static_cast<int>(boundary.size()); ++d) {
    const auto& B1 = boundary[d];      // C_d -> C_{d-1}
    const auto& B0 = boundary[d - 1];  // C_{d-1} -> C_{d-2}
    if (B1.empty() || B0.empty()) continue;
    int rows = static_cast<int>(B0.size());
    int mid = static_cast<int>(B1.size());
    int cols = B1.empty() ? 0 : static_cast<int>(B1[0].size());
    for (int c = 0; c < cols; ++c)
      for (int r = 0; r < rows; ++r) {
        __int128 acc = 0;
        for (int k = 0; k < mid; ++k) acc += static_cast<__int128>(B0[r][k]) * B1[k][c];
        if (acc != 0) throw std::runtime_error("chain complex: boundary^2 != 0");
      }
  }
}

long long ChainComplex::euler_characteristic() const {
  long long chi = 0;
  for (int d = 0; d <= dim_bound; ++d) chi += (d % 2 == 0 ? 1 : -1) * rank(d);
  return chi;
}

namespace {

using Mat = std::vector<std::vector<std::int64_t>>;

std::int64_t ck_mul(std::int64_t a, std::int64_t b) {
  __int128 p = static_cast<__int128>(a) * b;
  if (p > INT64_MAX || p < INT64_MIN) throw std::overflow_error("smith: 64-bit overflow");
  return static_cast<std::int64_t>(p);
}
std::int64_t ck_sub(std::int64_t a, std::int64_t b) {
  __int128 s = static_cast<__int128>(a) - b;
  if (s > INT64_MAX || s < INT64_MIN) throw std::overflow_error("smith: 64-bit overflow");
  return static_cast<std::int64_t>(s);
}

}  // namespace

/*
  Textbook Smith reduction with pivoting on the least nonzero magnitude.
  Matrices here are small (boundary matrices of order complexes and
  truncated nerves), so no effort is spent on sparsity; entry growth is
  kept in check by always reducing against the smallest entry.
*/
std::vector<long long> smith_invariant_factors(Mat a) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<long long> diag;
  int r0 = 0, c0 = 0;
  while (r0 < rows && c0 < cols) {
    // locate pivot of least nonzero magnitude
    int pr = -1, pc = -1;
    std::int64_t best = 0;
    for (int i = r0; i < rows; ++i)
      for (int j = c0; j < cols; ++j) {
        std::int64_t v = a[i][j] < 0 ? -a[i][j] : a[i][j];
        if (v != 0 && (pr < 0 || v < best)) { pr = i; pc = j; best = v; }
      }
    if (pr < 0) break;
    std::swap(a[r0], a[pr]);
    for (int i = 0; i < rows; ++i) std::swap(a[i][c0], a[i][pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = r0 + 1; i < rows; ++i) {
        if (a[i][c0] == 0) continue;
        std::int64_t q = a[i][c0] / a[r0][c0];
        for (int j = c0; j < cols; ++j) a[i][j] = ck_sub(a[i][j], ck_mul(q, a[r0][j]));
        if (a[i][c0] != 0) {  // remainder smaller than pivot: swap up and restart
          std::swap(a[r0], a[i]);
          clean = false;
        }
      }
      for (int j = c0 + 1; j < cols; ++j) {
        if (a[r0][j] == 0) continue;
        std::int64_t q = a[r0][j] / a[r0][c0];
        for (int i = r0; i < rows; ++i) a[i][j] = ck_sub(a[i][j], ck_mul(q, a[i][c0]));
        if (a[r0][j] != 0) {
          for (int i = 0; i < rows; ++i) std::swap(a[i][c0], a[i][j]);
          clean = false;
        }
      }
    }
    diag.push_back(std::llabs(a[r0][c0]));
    ++r0; ++c0;
  }
  // enforce divisibility d1 | d2 | ...
  for (size_t i = 0; i + 1 < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      long long g = std::gcd(diag[i], diag[j]);
      long long l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  std::sort(diag.begin(), diag.end());
  return diag;
}

std::vector<DegreeHomology> homology(const ChainComplex& c) {
  c.validate_dd_zero();
  std::vector<DegreeHomology> out;
  int top = c.dim_bound;
  std::vector<std::vector<long long>> snf(top + 2);
  for (int d = 0; d <= top + 1; ++d) {
    if (d >= 1 && d < static_cast<int>(c.boundary.size()) && !c.boundary[d].empty() &&
        !c.boundary[d][0].empty())
      snf[d] = smith_invariant_factors(c.boundary[d]);
  }
  auto rank_of = [&](int d) -> long long {
    if (d < 1 || d > top + 1) return 0;
    long long r = 0;
    for (long long v : snf[d]) if (v != 0) ++r;
    return r;
  };
  for (int d = 0; d <= top; ++d) {
    DegreeHomology h;
    h.degree = d;
    h.betti = c.rank(d) - rank_of(d) - rank_of(d + 1);
    for (long long v : snf[d + 1]) if (v > 1) h.torsion.push_back(v);
    // with a truncated enumeration the boundary from dimension top+1 is
    // unknown, so the top degree cannot be certified
    h.known = !(c.truncated && d >= c.dim_bound);
    out.push_back(h);
  }
  return out;
}

bool homology_is_contractible(const std::vector<DegreeHomology>& h) {
  for (const auto& d : h) {
    if (!d.known) return false;
    long long expect = d.degree == 0 ? 1 : 0;
    if (d.betti != expect || !d.torsion.empty()) return false;
  }
  return !h.empty();
}

std::string homology_str(const std::vector<DegreeHomology>& h) {
  std::string s;
  for (const auto& d : h) {
    if (!s.empty()) s += " ";
    s += "H" + std::to_string(d.degree) + "=Z^" + std::to_string(d.betti);
    for (long long t : d.torsion) s += "+Z/" + std::to_string(t);
    if (!d.known) s += "?";
  }
  return s;
}

ChainComplex order_complex(const FinPoset& p) {
  p.validate();
  int n = p.size();
  ChainComplex c;
  // chains by DFS; basis[d] in lexicographic order of index sequences
  std::vector<std::vector<std::vector<int>>> chains;  // per dim, list of chains
  chains.push_back({});
  for (int i = 0; i < n; ++i) chains[0].push_back({i});
  while (!chains.back().empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& ch : chains.back())
      for (int j = 0; j < n; ++j)
        if (j != ch.back() && p.le[ch.back()][j]) {
          auto e = ch;
          e.push_back(j);
          next.push_back(e);
        }
    if (next.empty()) break;
    chains.push_back(std::move(next));
  }
  c.dim_bound = static_cast<int>(chains.size()) - 1;
  c.truncated = false;
  c.basis.resize(chains.size());
  std::vector<std::map<std::vector<int>, int>> index(chains.size());
  for (int d = 0; d < static_cast<int>(chains.size()); ++d) {
    std::sort(chains[d].begin(), chains[d].end());
    for (const auto& ch : chains[d]) {
      std::string nm;
      for (int v : ch) nm += (nm.empty() ? "" : "<") + p.elems[v];
      index[d][ch] = static_cast<int>(c.basis[d].size());
      c.basis[d].push_back(nm);
    }
  }
  c.boundary.resize(chains.size());
  for (int d = 1; d < static_cast<int>(chains.size()); ++d) {
    c.boundary[d].assign(c.basis[d - 1].size(),
                         std::vector<std::int64_t>(c.basis[d].size(), 0));
    for (const auto& ch : chains[d]) {
      int col = index[d][ch];
      for (int f = 0; f <= d; ++f) {
        auto face = ch;
        face.erase(face.begin() + f);
        int row = index[d - 1][face];
        c.boundary[d][row][col] += (f % 2 == 0 ? 1 : -1);
      }
    }
  }
  return c;
}

ChainComplex nerve_truncated(const FinCategory& cat, int D) {
  if (D < 0) throw std::invalid_argument("nerve_truncated: negative bound");
  cat.validate();
  ChainComplex c;
  c.truncated = true;
  c.dim_bound = D;
  // chains of composable non-identity morphisms
  std::vector<std::vector<std::vector<int>>> chains(D + 1);
  for (int x = 0; x < cat.num_objects(); ++x) chains[0].push_back({x});
  std::vector<int> nonid;
  for (int f = 0; f < cat.num_morphisms(); ++f)
    if (!cat.is_identity(f)) nonid.push_back(f);
  if (D >= 1)
    for (int f : nonid) chains[1].push_back({f});
  for (int d = 2; d <= D; ++d) {
    for (const auto& ch : chains[d - 1])
      for (int f : nonid)
        if (cat.mors[ch.back()].dst == cat.mors[f].src) {
          auto e = ch;
          e.push_back(f);
          chains[d].push_back(e);
        }
    if (chains[d].empty()) { c.dim_bound = d - 1; c.truncated = false; break; }
  }
  while (c.dim_bound > 0 && chains[c.dim_bound].empty()) {
    --c.dim_bound;
    c.truncated = false;
  }
  int top = c.dim_bound;
  c.basis.resize(top + 1);
  std::vector<std::map<std::vector<int>, int>> index(top + 1);
  for (int d = 0; d <= top; ++d) {
    std::sort(chains[d].begin(), chains[d].end());
    for (const auto& ch : chains[d]) {
      std::string nm;
      if (d == 0) nm = cat.obj_names[ch[0]];
      else
        for (int f : ch) nm += (nm.empty() ? "" : ";") + cat.mors[f].name;
      index[d][ch] = static_cast<int>(c.basis[d].size());
      c.basis[d].push_back(nm);
    }
  }
  c.boundary.resize(top + 1);
  for (int d = 1; d <= top; ++d) {
    c.boundary[d].assign(c.basis[d - 1].size(),
                         std::vector<std::int64_t>(c.basis[d].size(), 0));
    for (const auto& ch : chains[d]) {
      int col = index[d][ch];
      auto add_face = [&](const std::vector<int>& face, int sgn) {
        auto it = index[d - 1].find(face);
        if (it == index[d - 1].end())
          throw std::runtime_error("nerve: face not found");
        c.boundary[d][it->second][col] += sgn;
      };
      // d_0 drops the first arrow, d_d the last, inner faces compose;
      // a face with an identity composite is degenerate and contributes 0
      if (d == 1) {
        add_face({cat.mors[ch[0]].dst}, +1);   // d_0 = target
        add_face({cat.mors[ch[0]].src}, -1);   // d_1 = source
      } else {
        {
          std::vector<int> face(ch.begin() + 1, ch.end());
          add_face(face, +1);
        }
        for (int i = 1; i < d; ++i) {
          int comp = cat.compose(ch[i - 1], ch[i]);
          if (cat.is_identity(comp)) continue;  // degenerate
          std::vector<int> face;
          for (int q = 0; q < i - 1; ++q) face.push_back(ch[q]);
          face.push_back(comp);
          for (int q = i + 1; q < d; ++q) face.push_back(ch[q]);
          add_face(face, i % 2 == 0 ? 1 : -1);
        }
        {
          std::vector<int> face(ch.begin(), ch.end() - 1);
          add_face(face, d % 2 == 0 ? 1 : -1);
        }
      }
    }
  }
  return c;
}

bool poset_contractible(const FinPoset& p) {
  if (p.size() == 0) return false;
  if (p.reduces_to_point()) return true;
  return homology_is_contractible(homology(order_complex(p)));
}

}  // namespace cgop
