#include "fockcb/canonical.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace fockcb {

CanonicalBasis::CanonicalBasis(ParamSet params, int rank)
    : params_(std::move(params)), rank_(rank) {
  if (rank_ < 0) throw precondition_error("rank must be nonnegative");
}

bool CanonicalBasis::contains(const Multipartition& mp) const { return index_.contains(mp); }

const FockVector& CanonicalBasis::at(const Multipartition& mp) const {
  auto it = index_.find(mp);
  if (it == index_.end())
    throw precondition_error("no canonical element for " + mp.to_string());
  return entries_[it->second].vector;
}

void CanonicalBasis::insert(Entry entry) {
  if (entry.label.rank() != rank_)
    throw diagram_error("entry rank does not match the basis rank");
  if (index_.contains(entry.label))
    throw invariant_error("duplicate canonical element for " + entry.label.to_string());
  index_.emplace(entry.label, entries_.size());
  entries_.push_back(std::move(entry));
}

std::vector<const CanonicalBasis::Entry*> CanonicalBasis::by_ascending_a() const {
  std::vector<const Entry*> out;
  out.reserve(entries_.size());
  for (const Entry& entry : entries_) out.push_back(&entry);
  std::sort(out.begin(), out.end(), [](const Entry* x, const Entry* y) {
    if (x->a != y->a) return x->a < y->a;
    return x->label < y->label;
  });
  return out;
}

void CanonicalBasis::dump(std::ostream& os) const {
  for (const Entry* entry : by_ascending_a()) {
    os << "G(" << entry->label << ")\n";
    entry->vector.render(os);
  }
}

FockVector apply_a_sequence(const Multipartition& lam, const ParamSet& params, KScan scan) {
  AValueCache cache(params);
  return apply_a_sequence(lam, params, scan, cache);
}

FockVector apply_a_sequence(const Multipartition& lam, const ParamSet& params, KScan scan,
                            AValueCache& a_cache) {
  std::vector<Residue> seq = a_sequence(lam, params, scan);
  FockVector v = FockVector::unit(Multipartition::empty(params.level()));
  std::size_t begin = 0;
  while (begin < seq.size()) {
    std::size_t end = begin;
    while (end < seq.size() && seq[end] == seq[begin]) ++end;
    v = apply_f_divided(seq[begin], static_cast<int>(end - begin), v, params);
    begin = end;
  }
  if (!(v.coeff(lam) == Laurent(1)))
    throw invariant_error("a-sequence vector is not unital at " + lam.to_string());
  const Rational& a_lam = a_cache(lam);
  for (const auto& [mu, coeff] : v.terms()) {
    if (mu == lam) continue;
    if (!(a_cache(mu) > a_lam))
      throw invariant_error("a-sequence vector for " + lam.to_string() +
                            " has support at a-value not above its own");
  }
  return v;
}

FockVector reduce_to_canonical(FockVector vec, const Multipartition& lam,
                               const CanonicalBasis& known, AValueCache& a_cache,
                               const BasisOptions& options) {
  const ParamSet& params = a_cache.params();
  const Rational& a_lam = a_cache(lam);
  // each known canonical element is subtracted at most once
  std::size_t guard = known.size() + 1;
  for (std::size_t round = 0; round <= guard; ++round) {
    const Multipartition* offender = nullptr;
    for (const auto& [mu, coeff] : vec.terms()) {
      if (mu == lam || coeff.in_qZq()) continue;
      if (offender == nullptr) {
        offender = &mu;
        continue;
      }
      const Rational& a_mu = a_cache(mu);
      const Rational& a_best = a_cache(*offender);
      bool better = a_mu != a_best ? a_mu < a_best
                                   : (options.reverse_offender_ties ? *offender < mu : mu < *offender);
      if (better) offender = &mu;
    }
    if (offender == nullptr) {
      if (!(vec.coeff(lam) == Laurent(1)))
        throw invariant_error("reduction lost the unit coefficient at " + lam.to_string());
      return vec;
    }
    if (round == guard)
      throw invariant_error("reduction failed to terminate for " + lam.to_string());
    Multipartition nu = *offender;
    if (!(a_cache(nu) > a_lam))
      throw invariant_error("offending term " + nu.to_string() +
                            " does not lie above the target a-value");
    if (!is_flotw(nu, params))
      throw invariant_error("offending term " + nu.to_string() + " is not FLOTW");
    if (!known.contains(nu))
      throw invariant_error("canonical element for offending term " + nu.to_string() +
                            " is not yet available");
    Laurent alpha = vec.coeff(nu).bar_symmetric_completion();
    vec -= known.at(nu).scaled(alpha);
  }
  throw invariant_error("unreachable reduction state");
}

CanonicalBasis compute_canonical_basis(int n, const ParamSet& params,
                                       const BasisOptions& options) {
  AValueCache cache(params);
  std::vector<Multipartition> flotw = enumerate_flotw(n, params);
  // process by strictly descending a-value; ties cannot interact, but a
  // fixed order keeps runs reproducible
  std::sort(flotw.begin(), flotw.end(), [&](const Multipartition& x, const Multipartition& y) {
    const Rational& ax = cache(x);
    const Rational& ay = cache(y);
    if (ax != ay) return ax > ay;
    return x < y;
  });
  CanonicalBasis basis(params, n);
  for (const Multipartition& lam : flotw) {
    FockVector a_vec = apply_a_sequence(lam, params, options.k_scan, cache);
    FockVector canonical = reduce_to_canonical(std::move(a_vec), lam, basis, cache, options);
    basis.insert({lam, std::move(canonical), cache(lam)});
  }
  return basis;
}

}  // namespace fockcb
