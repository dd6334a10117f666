#pragma once

#include <string>
#include <vector>

#include "fockcb/multipartition.hpp"

namespace fockcb {

// Scan direction used when several residues are eligible in peel_step. The
// computed canonical basis must not depend on the choice; the descending
// scan exists to verify exactly that.
enum class KScan { ascending, descending };

// FLOTW membership: the cyclic row-dominance conditions
//   part^{(j)}_i >= part^{(j+1)}_{i + v_{j+1} - v_j}          (0 <= j <= d-2)
//   part^{(d-1)}_i >= part^{(0)}_{i + e + v_0 - v_{d-1}}
// plus, for every occurring row length k > 0, at least one residue of
// {0..e-1} missing among the right ends of the length-k rows.
bool is_flotw(const Multipartition& mp, const ParamSet& params);

// All FLOTW multipartitions of the given rank, canonical order.
std::vector<Multipartition> enumerate_flotw(int n, const ParamSet& params);

struct PeelStep {
  Residue k;           // residue removed in this step
  int count = 0;       // number of nodes removed
  Multipartition rest; // remaining multipartition, again FLOTW
};

// One peeling step on a nonempty FLOTW multipartition: picks a residue k
// carried by a removable node on a maximal-length part such that no
// (k-1)-node sits at the right end of a maximal-length part, then removes
// every removable k-node on parts longer than the longest part ending in a
// (k-1)-node (all of them when no such part exists).
PeelStep peel_step(const Multipartition& mp, const ParamSet& params,
                   KScan scan = KScan::ascending);

// Full residue sequence of the peeling, first-applied first: peeling mp
// down to the empty multipartition contributes its residues back to front.
std::vector<Residue> a_sequence(const Multipartition& mp, const ParamSet& params,
                                KScan scan = KScan::ascending);

// Comma-separated rendering, e.g. "3,2,2,1,1,3,0,0,0".
std::string render_a_sequence(const std::vector<Residue>& seq);

}  // namespace fockcb
