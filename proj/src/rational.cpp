#include "folcoh/rational.hpp"

#include <cctype>

namespace folcoh {

std::string rat_str(const Scalar& x) {
  const Int num = boost::multiprecision::numerator(x);
  const Int den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

static bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::optional<Scalar> rat_parse(const std::string& tok) {
  std::string s = tok;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = (s[0] == '-');
    s.erase(0, 1);
  }
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  Int d(den);
  if (d == 0) return std::nullopt;
  Scalar r(Int(num), d);
  if (neg) r = -r;
  return r;
}

Scalar rat_gcd(const Scalar& a, const Scalar& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const Int n = gcd(abs(numerator(a)), abs(numerator(b)));
  const Int d = lcm(denominator(a), denominator(b));
  return Scalar(n, d);
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

std::string vec_str(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += rat_str(v[i]);
  }
  return s;
}

} // namespace folcoh
