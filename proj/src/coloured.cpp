#include "cgop/coloured.hpp"

#include <stdexcept>

namespace cgop {

std::string ColouredObject::str() const {
  std::string s = mu.str() + "(";
  for (int i = 0; i < arity(); ++i) {
    if (i) s += ",";
    s += oct_name(src[i], ambient());
  }
  return s + ")->" + oct_name(tgt, ambient());
}

static void check_wellformed(const ColouredObject& x) {
  int m = x.ambient();
  if (static_cast<int>(x.src.size()) != x.arity())
    throw std::invalid_argument("coloured object: arity mismatch");
  if (!oct_valid(x.tgt, m)) throw std::invalid_argument("coloured object: invalid target colour");
  for (const auto& c : x.src)
    if (!oct_valid(c, m)) throw std::invalid_argument("coloured object: invalid source colour");
}

bool in_ccg(const ColouredObject& x) {
  check_wellformed(x);
  int m = x.ambient();
  for (const auto& c : x.src)
    if (!oct_le(c, x.tgt, m)) return false;
  return true;
}

bool in_pcg(const ColouredObject& x) {
  if (!in_ccg(x)) return false;
  int m = x.ambient();
  for (int i = 0; i < x.arity(); ++i)
    for (int j = i + 1; j < x.arity(); ++j) {
      int l = x.mu.at(i, j);
      if (oct_le(x.src[i], OctElement{-1, l}, m) || oct_le(x.src[j], OctElement{+1, l}, m))
        continue;
      return false;
    }
  return true;
}

bool in_fivedots_op(const ColouredKmOp& x) {
  if (!in_ccg(x.obj)) return false;
  int m = x.obj.ambient();
  for (int i = 0; i < x.obj.arity(); ++i)
    for (int j = i + 1; j < x.obj.arity(); ++j) {
      int l = x.obj.mu.at(i, j);
      int s = s_ij(x.sigma, i, j);
      if (oct_le(x.obj.src[i], OctElement{-s, l}, m) ||
          oct_le(x.obj.src[j], OctElement{s, l}, m))
        continue;
      return false;
    }
  return true;
}

bool in_ucg(const ColouredObject& x) {
  if (!in_pcg(x)) return false;
  int m = x.ambient();
  if (x.tgt != oct_top(m)) return true;
  int tops = 0;
  for (const auto& c : x.src)
    if (c == oct_top(m)) ++tops;
  return tops == 1;
}

bool in_scg(const ColouredObject& x) {
  if (!in_ccg(x)) return false;
  int m = x.ambient();
  if (x.tgt != oct_top(m)) return true;
  return x.arity() == 1 && x.src[0] == oct_top(m);
}

ColouredObject restrict_to(const ColouredObject& x, const std::vector<int>& subset,
                           const OctElement& new_target) {
  for (size_t q = 0; q < subset.size(); ++q) {
    if (subset[q] < 0 || subset[q] >= x.arity())
      throw std::invalid_argument("restrict: index out of range");
    if (q > 0 && subset[q - 1] >= subset[q])
      throw std::invalid_argument("restrict: subset must be strictly increasing");
  }
  ColouredObject r;
  r.mu = LevelMatrix(static_cast<int>(subset.size()), x.ambient());
  for (size_t p = 0; p < subset.size(); ++p)
    for (size_t q = p + 1; q < subset.size(); ++q)
      r.mu.set(static_cast<int>(p), static_cast<int>(q), x.mu.at(subset[p], subset[q]));
  for (int idx : subset) r.src.push_back(x.src[idx]);
  r.tgt = new_target;
  return r;
}

ColouredObject restrict_to(const ColouredObject& x, const std::vector<int>& subset) {
  return restrict_to(x, subset, x.tgt);
}

std::vector<Perm> ccg_hom(const ColouredObject& x, const ColouredObject& y, Reading reading) {
  std::vector<Perm> out;
  if (x.arity() != y.arity() || x.ambient() != y.ambient()) return out;
  if (!(x.tgt == y.tgt)) return out;
  for (const auto& s : cg_hom(x.mu, y.mu, reading)) {
    bool ok = true;
    for (int i = 0; i < x.arity() && ok; ++i)
      if (!(x.src[i] == y.src[s(i)])) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

std::vector<std::vector<OctElement>> all_colourings_below(const OctElement& c, int k, int m) {
  std::vector<OctElement> down;
  for (const auto& e : oct_elements(m))
    if (oct_le(e, c, m)) down.push_back(e);
  std::vector<std::vector<OctElement>> out;
  std::vector<OctElement> cur(k, c);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == k) { out.push_back(cur); return; }
    for (const auto& e : down) {
      cur[pos] = e;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<ColouredObject> all_ccg_objects(int k, int m) {
  std::vector<ColouredObject> out;
  for (const auto& mu : all_level_matrices(k, m))
    for (const auto& c : oct_elements(m))
      for (const auto& cl : all_colourings_below(c, k, m)) {
        ColouredObject x{mu, cl, c};
        out.push_back(x);
      }
  return out;
}

}  // namespace cgop
