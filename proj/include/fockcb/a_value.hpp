#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "fockcb/multipartition.hpp"

namespace fockcb {

// Exact rational; every value produced here has denominator dividing the
// level d.
using Rational = boost::multiprecision::cpp_rational;

// The shifted charge m^(c) = v_c - c*e/d + e, strictly positive under the
// ParamSet invariants.
Rational shifted_charge(int c, const ParamSet& params);

// Shifted beta-numbers B'^(c)_p = part^(c)_p - p + n + m^(c) for p = 1..n
// with n the rank of the whole multipartition; strictly decreasing and
// positive.
std::vector<Rational> shifted_beta_numbers(const Multipartition& mp, int c,
                                           const ParamSet& params);

// The a-value
//   sum over 0<=i<=j<d of min{a,b} over pairs (a,b) in B'^(i) x B'^(j)
//     (with a > b when i = j)
//   minus sum over 0<=i,j<d, a in B'^(i), integer 1<=k<=floor(a)
//     of min{k, m^(j)}.
// Defined for every multipartition; orders the triangular reduction within
// a fixed rank.
Rational a_value(const Multipartition& mp, const ParamSet& params);

// Exact comparison of a-values; requires equal ranks.
std::strong_ordering a_compare(const Multipartition& x, const Multipartition& y,
                               const ParamSet& params);

// Reduced fraction "p/q", plain integer when the denominator is 1.
std::string rational_to_string(const Rational& r);

// Per-run memo of a-values. Single-writer: fill from one thread, or treat
// as read-only once filled.
class AValueCache {
 public:
  explicit AValueCache(const ParamSet& params) : params_(params) {}
  const Rational& operator()(const Multipartition& mp);
  const ParamSet& params() const { return params_; }

 private:
  ParamSet params_;
  std::map<Multipartition, Rational> memo_;
};

}  // namespace fockcb
