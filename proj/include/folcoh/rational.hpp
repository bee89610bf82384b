#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace folcoh {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. cpp_rational keeps the canonical form invariant for us:
/// reduced fraction, positive denominator.
using Scalar = boost::multiprecision::cpp_rational;

using Vec = std::vector<Scalar>;

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string rat_str(const Scalar& x);

/// Parses "p", "-p", or "p/q". Returns nullopt on malformed input or zero denominator.
std::optional<Scalar> rat_parse(const std::string& tok);

/// gcd over Q: gcd(p1/q1, p2/q2) = gcd(p1,p2) / lcm(q1,q2), nonnegative.
Scalar rat_gcd(const Scalar& a, const Scalar& b);

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
std::string vec_str(const Vec& v);

} // namespace folcoh
