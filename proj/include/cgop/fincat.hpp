#ifndef CGOP_FINCAT_HPP
#define CGOP_FINCAT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cgop {

/*
  Finite category with an explicit (sparse) composition table.  Objects and
  morphisms are indexed densely; every morphism carries (src, dst) and a
  canonical name, so categories built from the same domain data in different
  runs compare equal.

  Composition convention: compose(f, g) with f: x -> y, g: y -> z yields
  g.f : x -> z ("f then g").
*/
struct FinCategory {
  std::vector<std::string> obj_names;
  struct Mor { int src; int dst; std::string name; };
  std::vector<Mor> mors;
  std::vector<int> identity_of;                    // object -> morphism id
  std::unordered_map<std::int64_t, int> comp_map;  // key(f,g) -> g.f

  static std::int64_t key(int f, int g) {
    return (static_cast<std::int64_t>(f) << 32) | static_cast<std::uint32_t>(g);
  }

  int num_objects() const { return static_cast<int>(obj_names.size()); }
  int num_morphisms() const { return static_cast<int>(mors.size()); }

  bool composable(int f, int g) const { return mors[f].dst == mors[g].src; }
  int compose(int f, int g) const {
    auto it = comp_map.find(key(f, g));
    if (it == comp_map.end()) throw std::runtime_error("FinCategory: missing composite");
    return it->second;
  }
  void set_compose(int f, int g, int fg) { comp_map[key(f, g)] = fg; }
  bool is_identity(int f) const { return identity_of[mors[f].src] == f && mors[f].src == mors[f].dst; }

  std::vector<int> hom(int x, int y) const;
  // hom-set cardinalities as an n x n matrix, one pass over morphisms
  std::vector<std::vector<int>> hom_counts() const;
  // per-object outgoing morphism lists
  std::vector<std::vector<int>> out_lists() const;

  // throws with a witness on any violation; associativity sweep optional
  // because it is cubic in morphisms
  void validate(bool check_associativity = true) const;

  std::optional<int> terminal() const;
  std::optional<int> initial() const;

  // zigzag classes; result[i] = class id of object i, numbered from 0
  std::vector<int> components() const;
  int num_components() const;
};

// Incremental builder; morphisms are deduplicated by name, identities are
// created together with their objects.
struct CategoryBuilder {
  FinCategory cat;
  std::unordered_map<std::string, int> obj_index;
  std::unordered_map<std::string, int> mor_index;

  int add_object(const std::string& name);
  int object(const std::string& name) const;
  int add_morphism(const std::string& name, int src, int dst);
  bool has_morphism(const std::string& name) const { return mor_index.count(name) > 0; }
  int morphism(const std::string& name) const;

  // fills the composition table over all composable pairs, naming composites
  // via the callback; throws if a composite is not declared (non-closure)
  void build_composition(
      const std::function<std::string(const std::string&, const std::string&)>& compose_names);

  FinCategory take() { return std::move(cat); }
};

/*
  Finite poset: elements plus a reflexive, antisymmetric, transitive le
  matrix.  Used directly for order complexes and beat point reduction, and
  convertible into a thin category when small.
*/
struct FinPoset {
  std::vector<std::string> elems;
  std::vector<std::vector<char>> le;  // le[i][j] == 1 iff i <= j

  int size() const { return static_cast<int>(elems.size()); }
  void validate() const;
  FinCategory to_category() const;
  std::optional<int> top() const;
  std::optional<int> bottom() const;

  // iterated removal of beat points; true means the core is a single point
  // (sound but incomplete contractibility certificate)
  bool reduces_to_point() const;
};

struct FinFunctor {
  const FinCategory* dom = nullptr;
  const FinCategory* cod = nullptr;
  std::vector<int> ob_map;
  std::vector<int> mor_map;

  void validate() const;
};

struct SliceResult {
  FinCategory fiber;   // objects strictly over y, morphisms over id_y
  FinCategory slice;   // y/F: pairs (x, u: y -> F x)
  // inclusion fiber -> slice; dom/cod pointers must be wired by the caller
  // to the fiber/slice stored here before validating
  FinFunctor inclusion;
  std::vector<int> fiber_obj;                  // fiber object -> dom object
  std::vector<std::pair<int, int>> slice_obj;  // slice object -> (dom object, u)
};

SliceResult slice_and_fiber(const FinFunctor& F, int y);

}  // namespace cgop

#endif
