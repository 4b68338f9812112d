#include "cgop/fincat.hpp"

#include <algorithm>
#include <array>

namespace cgop {

std::vector<int> FinCategory::hom(int x, int y) const {
  std::vector<int> out;
  for (int f = 0; f < num_morphisms(); ++f)
    if (mors[f].src == x && mors[f].dst == y) out.push_back(f);
  return out;
}

std::vector<std::vector<int>> FinCategory::hom_counts() const {
  std::vector<std::vector<int>> c(num_objects(), std::vector<int>(num_objects(), 0));
  for (const auto& m : mors) ++c[m.src][m.dst];
  return c;
}

std::vector<std::vector<int>> FinCategory::out_lists() const {
  std::vector<std::vector<int>> o(num_objects());
  for (int f = 0; f < num_morphisms(); ++f) o[mors[f].src].push_back(f);
  return o;
}

void FinCategory::validate(bool check_associativity) const {
  int n = num_objects(), M = num_morphisms();
  if (static_cast<int>(identity_of.size()) != n)
    throw std::runtime_error("category: missing identities");
  for (int x = 0; x < n; ++x) {
    int e = identity_of[x];
    if (e < 0 || e >= M || mors[e].src != x || mors[e].dst != x)
      throw std::runtime_error("category: bad identity on object " + obj_names[x]);
  }
  for (int f = 0; f < M; ++f)
    if (mors[f].src < 0 || mors[f].src >= n || mors[f].dst < 0 || mors[f].dst >= n)
      throw std::runtime_error("category: morphism endpoints out of range: " + mors[f].name);

  auto out = out_lists();
  for (int f = 0; f < M; ++f) {
    for (int g : out[mors[f].dst]) {
      auto it = comp_map.find(key(f, g));
      if (it == comp_map.end())
        throw std::runtime_error("category: composable pair without composite: " + mors[f].name +
                                 " ; " + mors[g].name);
      int fg = it->second;
      if (mors[fg].src != mors[f].src || mors[fg].dst != mors[g].dst)
        throw std::runtime_error("category: composite has wrong endpoints: " + mors[fg].name);
    }
  }
  for (const auto& [k, fg] : comp_map) {
    int f = static_cast<int>(k >> 32), g = static_cast<int>(k & 0xffffffff);
    (void)fg;
    if (!composable(f, g))
      throw std::runtime_error("category: composite defined for non-composable pair");
  }
  for (int f = 0; f < M; ++f) {
    if (compose(identity_of[mors[f].src], f) != f || compose(f, identity_of[mors[f].dst]) != f)
      throw std::runtime_error("category: unit law fails at " + mors[f].name);
  }
  if (check_associativity) {
    for (int f = 0; f < M; ++f)
      for (int g : out[mors[f].dst]) {
        int fg = compose(f, g);
        for (int h : out[mors[g].dst])
          if (compose(fg, h) != compose(f, compose(g, h)))
            throw std::runtime_error("category: associativity fails at " + mors[f].name + " ; " +
                                     mors[g].name + " ; " + mors[h].name);
      }
  }
}

std::optional<int> FinCategory::terminal() const {
  auto c = hom_counts();
  for (int y = 0; y < num_objects(); ++y) {
    bool ok = true;
    for (int x = 0; x < num_objects() && ok; ++x)
      if (c[x][y] != 1) ok = false;
    if (ok) return y;
  }
  return std::nullopt;
}

std::optional<int> FinCategory::initial() const {
  auto c = hom_counts();
  for (int x = 0; x < num_objects(); ++x) {
    bool ok = true;
    for (int y = 0; y < num_objects() && ok; ++y)
      if (c[x][y] != 1) ok = false;
    if (ok) return x;
  }
  return std::nullopt;
}

namespace {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};
}  // namespace

std::vector<int> FinCategory::components() const {
  UnionFind uf(num_objects());
  for (const auto& m : mors) uf.unite(m.src, m.dst);
  std::vector<int> cls(num_objects(), -1);
  int next = 0;
  for (int i = 0; i < num_objects(); ++i) {
    int r = uf.find(i);
    if (cls[r] < 0) cls[r] = next++;
    cls[i] = cls[r];
  }
  return cls;
}

int FinCategory::num_components() const {
  auto c = components();
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

int CategoryBuilder::add_object(const std::string& name) {
  auto it = obj_index.find(name);
  if (it != obj_index.end()) return it->second;
  int id = cat.num_objects();
  cat.obj_names.push_back(name);
  obj_index[name] = id;
  int e = cat.num_morphisms();
  cat.mors.push_back({id, id, "id[" + name + "]"});
  mor_index["id[" + name + "]"] = e;
  cat.identity_of.push_back(e);
  return id;
}

int CategoryBuilder::object(const std::string& name) const {
  auto it = obj_index.find(name);
  if (it == obj_index.end()) throw std::runtime_error("builder: unknown object " + name);
  return it->second;
}

int CategoryBuilder::add_morphism(const std::string& name, int src, int dst) {
  auto it = mor_index.find(name);
  if (it != mor_index.end()) {
    int id = it->second;
    if (cat.mors[id].src != src || cat.mors[id].dst != dst)
      throw std::runtime_error("builder: morphism name reused with different endpoints: " + name);
    return id;
  }
  int id = cat.num_morphisms();
  cat.mors.push_back({src, dst, name});
  mor_index[name] = id;
  return id;
}

int CategoryBuilder::morphism(const std::string& name) const {
  auto it = mor_index.find(name);
  if (it == mor_index.end()) throw std::runtime_error("builder: unknown morphism " + name);
  return it->second;
}

void CategoryBuilder::build_composition(
    const std::function<std::string(const std::string&, const std::string&)>& compose_names) {
  auto out = cat.out_lists();
  for (int f = 0; f < cat.num_morphisms(); ++f)
    for (int g : out[cat.mors[f].dst]) {
      if (cat.is_identity(f)) { cat.set_compose(f, g, g); continue; }
      if (cat.is_identity(g)) { cat.set_compose(f, g, f); continue; }
      std::string name = compose_names(cat.mors[f].name, cat.mors[g].name);
      auto it = mor_index.find(name);
      if (it == mor_index.end())
        throw std::runtime_error("composition not closed: " + cat.mors[f].name + " ; " +
                                 cat.mors[g].name + " -> " + name);
      int fg = it->second;
      if (cat.mors[fg].src != cat.mors[f].src || cat.mors[fg].dst != cat.mors[g].dst)
        throw std::runtime_error("composite endpoints mismatch: " + name);
      cat.set_compose(f, g, fg);
    }
}

void FinPoset::validate() const {
  int n = size();
  for (int i = 0; i < n; ++i)
    if (!le[i][i]) throw std::runtime_error("poset: not reflexive at " + elems[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && le[i][j] && le[j][i])
        throw std::runtime_error("poset: antisymmetry fails at " + elems[i] + "," + elems[j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!le[i][j]) continue;
      for (int k = 0; k < n; ++k)
        if (le[j][k] && !le[i][k])
          throw std::runtime_error("poset: transitivity fails at " + elems[i] + "," + elems[j] +
                                   "," + elems[k]);
    }
}

std::optional<int> FinPoset::top() const {
  for (int t = 0; t < size(); ++t) {
    bool ok = true;
    for (int i = 0; i < size() && ok; ++i)
      if (!le[i][t]) ok = false;
    if (ok) return t;
  }
  return std::nullopt;
}

std::optional<int> FinPoset::bottom() const {
  for (int b = 0; b < size(); ++b) {
    bool ok = true;
    for (int i = 0; i < size() && ok; ++i)
      if (!le[b][i]) ok = false;
    if (ok) return b;
  }
  return std::nullopt;
}

FinCategory FinPoset::to_category() const {
  CategoryBuilder b;
  for (const auto& e : elems) b.add_object(e);
  int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && le[i][j]) b.add_morphism(elems[i] + "<=" + elems[j], i, j);
  auto& cat = b.cat;
  auto out = cat.out_lists();
  for (int f = 0; f < cat.num_morphisms(); ++f)
    for (int g : out[cat.mors[f].dst]) {
      if (cat.is_identity(f)) { cat.set_compose(f, g, g); continue; }
      if (cat.is_identity(g)) { cat.set_compose(f, g, f); continue; }
      int i = cat.mors[f].src, k = cat.mors[g].dst;
      cat.set_compose(f, g, i == k ? cat.identity_of[i] : b.morphism(elems[i] + "<=" + elems[k]));
    }
  return b.take();
}

bool FinPoset::reduces_to_point() const {
  int n = size();
  if (n == 0) return false;
  std::vector<char> alive(n, 1);
  int count = n;
  bool progress = true;
  while (progress && count > 1) {
    progress = false;
    for (int x = 0; x < n && count > 1; ++x) {
      if (!alive[x]) continue;
      std::vector<int> up, down;
      for (int y = 0; y < n; ++y) {
        if (!alive[y] || y == x) continue;
        if (le[x][y]) up.push_back(y);
        if (le[y][x]) down.push_back(y);
      }
      auto has_extremum = [&](const std::vector<int>& s, bool minimum) {
        for (int c : s) {
          bool ok = true;
          for (int y : s)
            if (minimum ? !le[c][y] : !le[y][c]) { ok = false; break; }
          if (ok) return true;
        }
        return false;
      };
      bool beat = (!up.empty() && has_extremum(up, true)) ||
                  (!down.empty() && has_extremum(down, false));
      if (beat) {
        alive[x] = 0;
        --count;
        progress = true;
      }
    }
  }
  return count == 1;
}

void FinFunctor::validate() const {
  if (!dom || !cod) throw std::runtime_error("functor: missing categories");
  if (static_cast<int>(ob_map.size()) != dom->num_objects() ||
      static_cast<int>(mor_map.size()) != dom->num_morphisms())
    throw std::runtime_error("functor: map sizes do not match domain");
  for (int f = 0; f < dom->num_morphisms(); ++f) {
    const auto& mf = dom->mors[f];
    const auto& img = cod->mors[mor_map[f]];
    if (img.src != ob_map[mf.src] || img.dst != ob_map[mf.dst])
      throw std::runtime_error("functor: endpoints not preserved at " + mf.name);
  }
  for (int x = 0; x < dom->num_objects(); ++x)
    if (mor_map[dom->identity_of[x]] != cod->identity_of[ob_map[x]])
      throw std::runtime_error("functor: identity not preserved at " + dom->obj_names[x]);
  auto out = dom->out_lists();
  for (int f = 0; f < dom->num_morphisms(); ++f)
    for (int g : out[dom->mors[f].dst])
      if (mor_map[dom->compose(f, g)] != cod->compose(mor_map[f], mor_map[g]))
        throw std::runtime_error("functor: composition not preserved at " + dom->mors[f].name +
                                 " ; " + dom->mors[g].name);
}

SliceResult slice_and_fiber(const FinFunctor& F, int y) {
  F.validate();
  const FinCategory& C = *F.dom;
  const FinCategory& D = *F.cod;
  SliceResult r;

  // ---- fiber
  CategoryBuilder fb;
  std::unordered_map<int, int> fiber_of;
  for (int x = 0; x < C.num_objects(); ++x)
    if (F.ob_map[x] == y) {
      fiber_of[x] = fb.add_object(C.obj_names[x]);
      r.fiber_obj.push_back(x);
    }
  std::vector<int> fiber_mor_of(C.num_morphisms(), -1);
  std::vector<int> back_f;  // fiber morphism -> dom morphism
  back_f.resize(fb.cat.num_morphisms(), -1);
  for (int i = 0; i < static_cast<int>(r.fiber_obj.size()); ++i)
    back_f[fb.cat.identity_of[i]] = C.identity_of[r.fiber_obj[i]];
  for (int f = 0; f < C.num_morphisms(); ++f) {
    const auto& m = C.mors[f];
    if (!fiber_of.count(m.src) || !fiber_of.count(m.dst)) continue;
    if (F.mor_map[f] != D.identity_of[y]) continue;
    if (C.is_identity(f)) { fiber_mor_of[f] = fb.cat.identity_of[fiber_of[m.src]]; continue; }
    int id = fb.add_morphism(m.name, fiber_of[m.src], fiber_of[m.dst]);
    fiber_mor_of[f] = id;
    if (static_cast<int>(back_f.size()) <= id) back_f.resize(id + 1, -1);
    back_f[id] = f;
  }
  for (int i = 0; i < static_cast<int>(r.fiber_obj.size()); ++i)
    fiber_mor_of[C.identity_of[r.fiber_obj[i]]] = fb.cat.identity_of[i];
  {
    auto& cat = fb.cat;
    auto out = cat.out_lists();
    for (int f = 0; f < cat.num_morphisms(); ++f)
      for (int g : out[cat.mors[f].dst])
        cat.set_compose(f, g, fiber_mor_of[C.compose(back_f[f], back_f[g])]);
  }
  r.fiber = fb.take();

  // ---- slice y/F
  CategoryBuilder sb;
  for (int x = 0; x < C.num_objects(); ++x)
    for (int u : D.hom(y, F.ob_map[x])) {
      sb.add_object("(" + C.obj_names[x] + "|" + D.mors[u].name + ")");
      r.slice_obj.push_back({x, u});
    }
  auto slice_of = [&](int x, int u) -> int {
    for (int i = 0; i < static_cast<int>(r.slice_obj.size()); ++i)
      if (r.slice_obj[i].first == x && r.slice_obj[i].second == u) return i;
    throw std::runtime_error("slice: object lookup failed");
  };
  auto smor_name = [&](int i, int j, int h) {
    return C.mors[h].name + "@" + std::to_string(i) + ">" + std::to_string(j);
  };
  std::vector<std::array<int, 3>> back_s;  // slice morphism -> (i, j, dom morphism)
  for (int i = 0; i < static_cast<int>(r.slice_obj.size()); ++i) {
    auto [x1, u1] = r.slice_obj[i];
    for (int j = 0; j < static_cast<int>(r.slice_obj.size()); ++j) {
      auto [x2, u2] = r.slice_obj[j];
      for (int h : C.hom(x1, x2)) {
        if (D.compose(u1, F.mor_map[h]) != u2) continue;
        if (i == j && C.is_identity(h)) continue;
        int id = sb.add_morphism(smor_name(i, j, h), i, j);
        if (static_cast<int>(back_s.size()) <= id) back_s.resize(id + 1, {-1, -1, -1});
        back_s[id] = {i, j, h};
      }
    }
  }
  {
    auto& cat = sb.cat;
    if (static_cast<int>(back_s.size()) < cat.num_morphisms())
      back_s.resize(cat.num_morphisms(), {-1, -1, -1});
    for (int i = 0; i < static_cast<int>(r.slice_obj.size()); ++i)
      back_s[cat.identity_of[i]] = {i, i, C.identity_of[r.slice_obj[i].first]};
    auto out = cat.out_lists();
    for (int f = 0; f < cat.num_morphisms(); ++f)
      for (int g : out[cat.mors[f].dst]) {
        int h = C.compose(back_s[f][2], back_s[g][2]);
        int i = back_s[f][0], j = back_s[g][1];
        int fg = (i == j && C.is_identity(h)) ? cat.identity_of[i] : sb.morphism(smor_name(i, j, h));
        cat.set_compose(f, g, fg);
      }
  }
  r.slice = sb.take();

  // ---- inclusion
  r.inclusion.ob_map.resize(r.fiber.num_objects());
  for (int i = 0; i < r.fiber.num_objects(); ++i)
    r.inclusion.ob_map[i] = slice_of(r.fiber_obj[i], D.identity_of[y]);
  r.inclusion.mor_map.resize(r.fiber.num_morphisms());
  std::unordered_map<std::string, int> slice_mor_by_name;
  for (int q = 0; q < r.slice.num_morphisms(); ++q) slice_mor_by_name[r.slice.mors[q].name] = q;
  for (int f = 0; f < r.fiber.num_morphisms(); ++f) {
    const auto& fm = r.fiber.mors[f];
    int i = r.inclusion.ob_map[fm.src], j = r.inclusion.ob_map[fm.dst];
    if (r.fiber.is_identity(f)) {
      r.inclusion.mor_map[f] = r.slice.identity_of[i];
    } else {
      auto it = slice_mor_by_name.find(fm.name + "@" + std::to_string(i) + ">" + std::to_string(j));
      if (it == slice_mor_by_name.end())
        throw std::runtime_error("slice: inclusion image missing for " + fm.name);
      r.inclusion.mor_map[f] = it->second;
    }
  }
  return r;
}

}  // namespace cgop
