#include "fockcb/fock.hpp"

#include <ostream>
#include <utility>

namespace fockcb {

FockVector::FockVector(int rank) : rank_(rank) {
  if (rank < 0) throw diagram_error("vector rank must be nonnegative");
}

FockVector FockVector::unit(const Multipartition& mp) {
  FockVector out(mp.rank());
  out.terms_.emplace(mp, Laurent(1));
  return out;
}

Laurent FockVector::coeff(const Multipartition& mp) const {
  auto it = terms_.find(mp);
  return it == terms_.end() ? Laurent() : it->second;
}

void FockVector::add_term(const Multipartition& mp, Laurent coeff) {
  if (mp.rank() != rank_) throw diagram_error("term rank does not match the vector rank");
  if (coeff.is_zero()) return;
  auto it = terms_.find(mp);
  if (it == terms_.end()) {
    terms_.emplace(mp, std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

// The zero vector belongs to every rank layer at once, so it adopts the
// rank of the other operand; mismatched nonzero operands are a bug.
FockVector& FockVector::operator+=(const FockVector& other) {
  if (other.is_zero()) return *this;
  if (is_zero())
    rank_ = other.rank_;
  else if (other.rank_ != rank_)
    throw diagram_error("cannot add vectors of different ranks");
  for (const auto& [mp, coeff] : other.terms_) add_term(mp, coeff);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  if (other.is_zero()) return *this;
  if (is_zero())
    rank_ = other.rank_;
  else if (other.rank_ != rank_)
    throw diagram_error("cannot subtract vectors of different ranks");
  for (const auto& [mp, coeff] : other.terms_) add_term(mp, -coeff);
  return *this;
}

FockVector FockVector::scaled(const Laurent& c) const {
  FockVector out(rank_);
  if (c.is_zero()) return out;
  for (const auto& [mp, coeff] : terms_) out.terms_.emplace(mp, coeff * c);
  return out;
}

void FockVector::render(std::ostream& os) const {
  for (const auto& [mp, coeff] : terms_) os << mp << " : " << coeff << '\n';
}

std::ostream& operator<<(std::ostream& os, const FockVector& v) {
  v.render(os);
  return os;
}

FockVector apply_f(Residue i, const FockVector& v, const ParamSet& params) {
  FockVector out(v.rank() + 1);
  for (const auto& [lam, coeff] : v.terms()) {
    for (const Node& node : addable_nodes(lam, i, params)) {
      Multipartition mu = lam.with_node_added(node);
      int exp = node_balance_below(lam, mu, i, params);
      out.add_term(mu, coeff * Laurent::monomial(1, exp));
    }
  }
  return out;
}

FockVector apply_e(Residue i, const FockVector& v, const ParamSet& params) {
  FockVector out(v.rank() > 0 ? v.rank() - 1 : 0);
  for (const auto& [lam, coeff] : v.terms()) {
    for (const Node& node : removable_nodes(lam, i, params)) {
      Multipartition mu = lam.with_node_removed(node);
      int exp = -node_balance_above(mu, lam, i, params);
      out.add_term(mu, coeff * Laurent::monomial(1, exp));
    }
  }
  return out;
}

FockVector apply_f_divided(Residue i, int r, const FockVector& v, const ParamSet& params) {
  if (r < 1) throw precondition_error("divided power requires a positive exponent");
  FockVector powered = v;
  for (int step = 0; step < r; ++step) powered = apply_f(i, powered, params);
  if (r == 1) return powered;
  Laurent factorial = Laurent::q_factorial(r);
  FockVector out(powered.rank());
  for (const auto& [mp, coeff] : powered.terms()) out.add_term(mp, exact_div(coeff, factorial));
  return out;
}

Laurent weight_k(Residue i, const Multipartition& mp, const ParamSet& params) {
  return Laurent::monomial(1, node_balance(mp, i, params));
}

Laurent weight_kd(const Multipartition& mp, const ParamSet& params) {
  return Laurent::monomial(1, -zero_node_count(mp, params));
}

}  // namespace fockcb
