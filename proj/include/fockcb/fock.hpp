#pragma once

#include <iosfwd>
#include <map>

#include "fockcb/laurent.hpp"
#include "fockcb/multipartition.hpp"

namespace fockcb {

// Finitely supported Z[q,q^-1]-combination of multipartitions of one fixed
// rank. Terms are kept in the canonical multipartition order and never map
// to the zero polynomial.
class FockVector {
 public:
  explicit FockVector(int rank = 0);
  static FockVector unit(const Multipartition& mp);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Multipartition, Laurent>& terms() const { return terms_; }
  Laurent coeff(const Multipartition& mp) const;

  // Accumulates coeff onto the term for mp, dropping it if the sum is zero.
  void add_term(const Multipartition& mp, Laurent coeff);

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  FockVector scaled(const Laurent& c) const;

  bool operator==(const FockVector&) const = default;

  // One "<multipartition> : <polynomial>" line per term, canonical order.
  void render(std::ostream& os) const;

 private:
  int rank_ = 0;
  std::map<Multipartition, Laurent> terms_;
};

std::ostream& operator<<(std::ostream& os, const FockVector& v);

// The module action on basis vectors, extended linearly:
//   f_i lam = sum over addable i-nodes gamma, with coefficient
//             q^node_balance_below(lam, lam+gamma)
//   e_i lam = sum over removable i-nodes gamma, with coefficient
//             q^-node_balance_above(lam-gamma, lam)
FockVector apply_f(Residue i, const FockVector& v, const ParamSet& params);
FockVector apply_e(Residue i, const FockVector& v, const ParamSet& params);

// Divided power f_i^(r) = f_i^r / [r]!, computed by iterating apply_f and
// dividing exactly; a not_divisible_error here means an invariant breach.
FockVector apply_f_divided(Residue i, int r, const FockVector& v, const ParamSet& params);

// Diagonal weights: k_{h_i} acts by q^node_balance(mp, i) and k_d by
// q^-zero_node_count(mp).
Laurent weight_k(Residue i, const Multipartition& mp, const ParamSet& params);
Laurent weight_kd(const Multipartition& mp, const ParamSet& params);

}  // namespace fockcb
