#include "cgop/oct.hpp"

#include <stdexcept>

#include "cgop/fincat.hpp"

namespace cgop {

std::string OctElement::str() const {
  return std::to_string(sign) + ":" + std::to_string(level);
}

bool oct_valid(const OctElement& a, int m) {
  if (a.sign == 0) return a.level == m + 1;
  return (a.sign == -1 || a.sign == 1) && a.level >= 1 && a.level <= m;
}

bool oct_le(const OctElement& a, const OctElement& b, int m) {
  if (!oct_valid(a, m) || !oct_valid(b, m))
    throw std::invalid_argument("oct_le: invalid element for m=" + std::to_string(m));
  return a == b || a.level < b.level;
}

std::vector<OctElement> oct_elements(int m) {
  std::vector<OctElement> out;
  for (int l = 1; l <= m; ++l) {
    out.push_back({-1, l});
    out.push_back({+1, l});
  }
  out.push_back(oct_top(m));
  return out;
}

static const char* kLetters = "ABCDE";

std::string oct_name(const OctElement& a, int m) {
  if (m == 2) {
    if (a == OctElement{-1, 1}) return "A";
    if (a == OctElement{+1, 1}) return "B";
    if (a == OctElement{-1, 2}) return "C";
    if (a == OctElement{+1, 2}) return "D";
    if (a == OctElement{0, 3}) return "E";
  }
  return a.str();
}

std::optional<OctElement> oct_parse(const std::string& s, int m) {
  if (s.size() == 1 && m == 2) {
    for (int i = 0; i < 5; ++i)
      if (s[0] == kLetters[i]) {
        static const OctElement tab[5] = {{-1, 1}, {1, 1}, {-1, 2}, {1, 2}, {0, 3}};
        return tab[i];
      }
  }
  auto pos = s.find(':');
  if (pos == std::string::npos) return std::nullopt;
  try {
    OctElement e{std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 1))};
    if (!oct_valid(e, m)) return std::nullopt;
    return e;
  } catch (...) {
    return std::nullopt;
  }
}

static FinPoset poset_from(const std::vector<OctElement>& elems, int m) {
  FinPoset p;
  for (const auto& e : elems) p.elems.push_back(oct_name(e, m));
  int n = static_cast<int>(elems.size());
  p.le.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      p.le[i][j] = oct_le(elems[i], elems[j], m) ? 1 : 0;
  return p;
}

FinPoset oct_poset(int m) { return poset_from(oct_elements(m), m); }

FinPoset sphere_poset(int m) {
  auto elems = oct_elements(m);
  elems.pop_back();  // drop the top
  return poset_from(elems, m);
}

Rat Box::centre(int axis) const { return (lo[axis] + hi[axis]) / Rat(2); }

bool Box::valid_in_unit_cube() const {
  for (int a = 0; a < dim(); ++a) {
    if (!(Rat(0) <= lo[a] && lo[a] < hi[a] && hi[a] <= Rat(1))) return false;
  }
  return true;
}

bool point_in_V(const std::vector<Rat>& x, int l) {
  if (l < 1 || l > static_cast<int>(x.size()) + 1)
    throw std::invalid_argument("point_in_V: level out of range");
  for (int a = 0; a < l - 1; ++a)
    if (x[a] != half()) return false;
  return true;
}

bool cube_in_H(const Box& b, int eps, int l) {
  if (l < 1 || l > b.dim()) throw std::invalid_argument("cube_in_H: axis out of range");
  if (eps == 1) return b.lo[l - 1] > half();
  if (eps == -1) return b.hi[l - 1] < half();
  throw std::invalid_argument("cube_in_H: sign must be +-1");
}

}  // namespace cgop
