#include "fockcb/flotw.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace fockcb {

bool is_flotw(const Multipartition& mp, const ParamSet& params) {
  if (mp.level() != params.level())
    throw diagram_error("multipartition level does not match the parameter set");
  int d = params.level(), e = params.e();

  // cyclic row dominance; rows past a partition's height read as 0
  for (int j = 0; j + 1 < d; ++j) {
    int shift = params.charge(j + 1) - params.charge(j);
    const Partition& upper = mp.component(j);
    const Partition& lower = mp.component(j + 1);
    for (int i = 1; i + shift <= lower.height(); ++i)
      if (upper.part(i) < lower.part(i + shift)) return false;
  }
  {
    int shift = e + params.charge(0) - params.charge(d - 1);
    const Partition& upper = mp.component(d - 1);
    const Partition& lower = mp.component(0);
    for (int i = 1; i + shift <= lower.height(); ++i)
      if (upper.part(i) < lower.part(i + shift)) return false;
  }

  // for every occurring row length, the residues at the right ends of rows
  // of that length must miss at least one element of Z/eZ
  std::map<int, std::set<int>> right_end_residues;
  for (int c = 0; c < d; ++c) {
    const Partition& comp = mp.component(c);
    for (int row = 1; row <= comp.height(); ++row) {
      int k = comp.part(row);
      auto& seen = right_end_residues[k];
      seen.insert(residue(Node{row, k, c}, params).value());
      if (static_cast<int>(seen.size()) == e) return false;
    }
  }
  return true;
}

std::vector<Multipartition> enumerate_flotw(int n, const ParamSet& params) {
  std::vector<Multipartition> out;
  for (auto& mp : enumerate_multipartitions(n, params.level()))
    if (is_flotw(mp, params)) out.push_back(std::move(mp));
  return out;
}

PeelStep peel_step(const Multipartition& mp, const ParamSet& params, KScan scan) {
  if (!is_flotw(mp, params)) throw precondition_error("peeling requires a FLOTW multipartition");
  if (mp.rank() == 0) throw precondition_error("cannot peel the empty multipartition");
  int d = params.level(), e = params.e();

  int max_length = 0;
  for (int c = 0; c < d; ++c) max_length = std::max(max_length, mp.component(c).part(1));

  // right-end residues: which occur on maximal-length parts, and the longest
  // part carrying each residue at its right end
  std::set<int> right_end_on_max;
  std::map<int, int> longest_with_right_end;
  for (int c = 0; c < d; ++c) {
    const Partition& comp = mp.component(c);
    for (int row = 1; row <= comp.height(); ++row) {
      int length = comp.part(row);
      int r = residue(Node{row, length, c}, params).value();
      if (length == max_length) right_end_on_max.insert(r);
      auto [it, inserted] = longest_with_right_end.emplace(r, length);
      if (!inserted) it->second = std::max(it->second, length);
    }
  }

  // eligible residues: carried by a removable node on a maximal-length part,
  // with no (k-1)-node at the right end of any maximal-length part
  auto removables = removable_nodes(mp, params);
  std::set<int> candidates;
  for (const Node& node : removables)
    if (node.col == max_length) candidates.insert(residue(node, params).value());

  auto eligible = [&](int k) { return !right_end_on_max.contains((k + e - 1) % e); };
  int chosen = -1;
  if (scan == KScan::ascending) {
    for (int k : candidates) {
      if (eligible(k)) {
        chosen = k;
        break;
      }
    }
  } else {
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
      if (eligible(*it)) {
        chosen = *it;
        break;
      }
    }
  }
  if (chosen < 0)
    throw invariant_error("peeling found no eligible residue on a maximal-length part");

  // remove every removable chosen-node on parts longer than the longest part
  // ending in a (chosen-1)-node; with no such part, all of them go
  int threshold = 0;
  if (auto it = longest_with_right_end.find((chosen + e - 1) % e);
      it != longest_with_right_end.end())
    threshold = it->second;

  Multipartition rest = mp;
  int count = 0;
  for (const Node& node : removables) {
    if (node.col > threshold && residue(node, params).value() == chosen) {
      rest = rest.with_node_removed(node);
      ++count;
    }
  }
  return PeelStep{Residue(chosen), count, std::move(rest)};
}

std::vector<Residue> a_sequence(const Multipartition& mp, const ParamSet& params, KScan scan) {
  if (!is_flotw(mp, params))
    throw precondition_error("the a-sequence requires a FLOTW multipartition");
  std::vector<std::pair<Residue, int>> chunks;
  Multipartition current = mp;
  while (current.rank() > 0) {
    PeelStep step = peel_step(current, params, scan);
    chunks.emplace_back(step.k, step.count);
    current = std::move(step.rest);
  }
  std::vector<Residue> seq;
  seq.reserve(static_cast<std::size_t>(mp.rank()));
  for (auto it = chunks.rbegin(); it != chunks.rend(); ++it)
    seq.insert(seq.end(), static_cast<std::size_t>(it->second), it->first);
  return seq;
}

std::string render_a_sequence(const std::vector<Residue>& seq) {
  std::ostringstream os;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    if (t > 0) os << ',';
    os << seq[t].value();
  }
  return os.str();
}

}  // namespace fockcb
