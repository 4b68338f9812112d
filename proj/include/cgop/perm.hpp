#ifndef CGOP_PERM_HPP
#define CGOP_PERM_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgop {

// Permutation of {1..k}, stored 0-based: v[i] = sigma(i+1)-1.
struct Perm {
  std::vector<int> v;

  Perm() = default;
  explicit Perm(int k) : v(k) { std::iota(v.begin(), v.end(), 0); }
  explicit Perm(std::vector<int> w) : v(std::move(w)) {}

  int size() const { return static_cast<int>(v.size()); }
  int operator()(int i) const { return v[i]; }  // 0-based
  bool is_identity() const {
    for (int i = 0; i < size(); ++i) if (v[i] != i) return false;
    return true;
  }

  // (a.after(b))(x) = a(b(x))
  Perm after(const Perm& b) const {
    Perm r; r.v.resize(size());
    for (int i = 0; i < size(); ++i) r.v[i] = v[b.v[i]];
    return r;
  }
  Perm inverse() const {
    Perm r; r.v.resize(size());
    for (int i = 0; i < size(); ++i) r.v[v[i]] = i;
    return r;
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.v == b.v; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.v < b.v; }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < size(); ++i) { if (i) s += ' '; s += std::to_string(v[i] + 1); }
    return s + ")";
  }
};

inline std::vector<Perm> all_perms(int k) {
  std::vector<int> base(k);
  std::iota(base.begin(), base.end(), 0);
  std::vector<Perm> out;
  do { out.push_back(Perm(base)); } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

// Relative order of i<j under sigma: +1 if sigma(i) < sigma(j), -1 otherwise.
inline int pair_sign(const Perm& sigma, int i, int j) {
  return sigma(i) < sigma(j) ? +1 : -1;
}

// Block permutation: blocks of sizes n_s are moved as units, block s landing
// at position sigma(s) among blocks, order inside blocks preserved.
inline Perm block_perm(const Perm& sigma, const std::vector<int>& sizes) {
  int k = sigma.size();
  if (static_cast<int>(sizes.size()) != k) throw std::invalid_argument("block_perm: size mismatch");
  std::vector<int> start_in(k), start_out(k);
  int acc = 0;
  for (int s = 0; s < k; ++s) { start_in[s] = acc; acc += sizes[s]; }
  for (int s = 0; s < k; ++s) {
    int off = 0;
    for (int u = 0; u < k; ++u)
      if (sigma(u) < sigma(s)) off += sizes[u];
    start_out[s] = off;
  }
  Perm r; r.v.resize(acc);
  for (int s = 0; s < k; ++s)
    for (int p = 0; p < sizes[s]; ++p)
      r.v[start_in[s] + p] = start_out[s] + p;
  return r;
}

// Operadic composite sigma(sigma_1,...,sigma_k): permute blocks by sigma and
// each block s internally by sigma_s.
inline Perm perm_substitute(const Perm& sigma, const std::vector<Perm>& inner) {
  int k = sigma.size();
  std::vector<int> sizes(k);
  for (int s = 0; s < k; ++s) sizes[s] = inner[s].size();
  std::vector<int> start_in(k), start_out(k);
  int acc = 0;
  for (int s = 0; s < k; ++s) { start_in[s] = acc; acc += sizes[s]; }
  for (int s = 0; s < k; ++s) {
    int off = 0;
    for (int u = 0; u < k; ++u)
      if (sigma(u) < sigma(s)) off += sizes[u];
    start_out[s] = off;
  }
  Perm r; r.v.resize(acc);
  for (int s = 0; s < k; ++s)
    for (int p = 0; p < sizes[s]; ++p)
      r.v[start_in[s] + p] = start_out[s] + inner[s](p);
  return r;
}

// tau_1 (+) ... (+) tau_k acting blockwise.
inline Perm direct_sum(const std::vector<Perm>& parts) {
  Perm r;
  int off = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.size(); ++i) r.v.push_back(off + p(i));
    off += p.size();
  }
  return r;
}

}  // namespace cgop

#endif
