#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>
#include <vector>

#include "fockcb/errors.hpp"

namespace fockcb {

// Z[q,q^-1] with arbitrary-precision integer coefficients, stored densely
// over the contiguous exponent window [min_exp, max_exp]. Both window ends
// carry nonzero coefficients unless the polynomial is zero; the zero
// polynomial has the unique empty representation.
class Laurent {
 public:
  using Int = boost::multiprecision::cpp_int;

  Laurent() = default;
  Laurent(long long constant) { *this = monomial(Int(constant), 0); }
  static Laurent monomial(Int coeff, int exp);

  bool is_zero() const { return coeffs_.empty(); }
  int min_exp() const { return is_zero() ? 0 : lo_; }
  int max_exp() const { return is_zero() ? 0 : lo_ + static_cast<int>(coeffs_.size()) - 1; }
  Int coeff(int exp) const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  Laurent& operator*=(const Laurent& other);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  bool operator==(const Laurent&) const = default;

  // The involution q -> q^-1.
  Laurent bar() const;

  // True iff every term has exponent >= 1 (membership in qZ[q]); true for 0.
  bool in_qZq() const;

  // The unique bar-invariant polynomial congruent to this one mod qZ[q]:
  // keeps the exponent-<=0 part and mirrors its strictly negative terms
  // onto positive exponents.
  Laurent bar_symmetric_completion() const;

  Int eval_at_one() const;

  // Terms in decreasing exponent: "q^2+2+q^-2"; unit coefficients are
  // suppressed except on the constant term.
  std::string to_string() const;

  // Balanced quantum integer [k]_q = q^(k-1) + q^(k-3) + ... + q^(1-k), k >= 1.
  static Laurent q_int(int k);
  // [r]! = [1]_q [2]_q ... [r]_q, with [0]! = 1.
  static Laurent q_factorial(int r);

  // Exact quotient numer/denom in Z[q,q^-1]; throws not_divisible_error if
  // the division leaves a remainder or needs fractional coefficients.
  friend Laurent exact_div(const Laurent& numer, const Laurent& denom);

 private:
  void normalize();

  int lo_ = 0;
  std::vector<Int> coeffs_;
};

Laurent exact_div(const Laurent& numer, const Laurent& denom);

std::ostream& operator<<(std::ostream& os, const Laurent& poly);

}  // namespace fockcb
