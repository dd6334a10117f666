#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <vector>

#include "fockcb/a_value.hpp"
#include "fockcb/flotw.hpp"
#include "fockcb/fock.hpp"

namespace fockcb {

struct BasisOptions {
  KScan k_scan = KScan::ascending;
  // Break ties between offending terms of equal a-value in reversed
  // canonical order. The result must be identical either way.
  bool reverse_offender_ties = false;
};

// The canonical basis of the rank-n layer of the submodule generated by the
// empty multipartition: one entry per FLOTW multipartition lam, with
// coefficient 1 at lam and all other support in qZ[q] at strictly larger
// a-value.
class CanonicalBasis {
 public:
  struct Entry {
    Multipartition label;
    FockVector vector;
    Rational a;
  };

  CanonicalBasis(ParamSet params, int rank);

  const ParamSet& params() const { return params_; }
  int rank() const { return rank_; }
  std::size_t size() const { return entries_.size(); }
  bool contains(const Multipartition& mp) const;
  const FockVector& at(const Multipartition& mp) const;

  // Entries in processing order: descending a-value, canonical order on ties.
  const std::vector<Entry>& entries() const { return entries_; }
  // Entries by ascending a-value, canonical order on ties (column order of
  // the decomposition matrix).
  std::vector<const Entry*> by_ascending_a() const;

  // One block per entry in ascending a-value order: a "G(<multipartition>)"
  // header followed by the vector rendering.
  void dump(std::ostream& os) const;

  void insert(Entry entry);

 private:
  ParamSet params_;
  int rank_ = 0;
  std::vector<Entry> entries_;
  std::map<Multipartition, std::size_t> index_;
};

// The vector obtained by applying the divided powers of the a-sequence of
// lam to the empty multipartition, grouping maximal runs of equal residues.
// Checks the triangular shape (coefficient 1 at lam, all other support at
// strictly larger a-value) and throws invariant_error on violation.
FockVector apply_a_sequence(const Multipartition& lam, const ParamSet& params,
                            KScan scan = KScan::ascending);
FockVector apply_a_sequence(const Multipartition& lam, const ParamSet& params, KScan scan,
                            AValueCache& a_cache);

// Triangular reduction: repeatedly locate the support term nu != lam of
// minimal a-value whose coefficient is not in qZ[q], and subtract
// bar_symmetric_completion(coefficient) times the known canonical element
// at nu. Requires every canonical element of larger a-value to be present
// in `known`.
FockVector reduce_to_canonical(FockVector vec, const Multipartition& lam,
                               const CanonicalBasis& known, AValueCache& a_cache,
                               const BasisOptions& options = {});

CanonicalBasis compute_canonical_basis(int n, const ParamSet& params,
                                       const BasisOptions& options = {});

}  // namespace fockcb
