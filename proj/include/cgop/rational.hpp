#ifndef CGOP_RATIONAL_HPP
#define CGOP_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cgop {

// Exact rational arithmetic on int64 numerator/denominator.
// All geometric predicates in this project go through Rat; any overflow
// is a hard failure rather than a silent wrap.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::runtime_error("Rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX || p < INT64_MIN)
      throw std::overflow_error("Rat: 64-bit overflow");
    return static_cast<std::int64_t>(p);
  }
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    __int128 s = static_cast<__int128>(a) + b;
    if (s > INT64_MAX || s < INT64_MIN)
      throw std::overflow_error("Rat: 64-bit overflow");
    return static_cast<std::int64_t>(s);
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
               checked_mul(a.den, b.den));
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(checked_add(checked_mul(a.num, b.den), -checked_mul(b.num, a.den)),
               checked_mul(a.den, b.den));
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::runtime_error("Rat: division by zero");
    return Rat(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
  }
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

  // exact comparison via cross multiplication in 128 bits
  friend bool operator<(const Rat& a, const Rat& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
  // parses "p" or "p/q"
  static Rat parse(const std::string& s);
};

inline Rat Rat::parse(const std::string& s) {
  auto pos = s.find('/');
  if (pos == std::string::npos) return Rat(std::stoll(s));
  return Rat(std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 1)));
}

}  // namespace cgop

#endif
