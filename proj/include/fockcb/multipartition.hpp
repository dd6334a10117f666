#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fockcb/params.hpp"

namespace fockcb {

// Weakly decreasing sequence of positive parts; trailing zeros are never
// stored, so the empty sequence is the empty partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // 1-based row access; rows past the last part read as 0.
  int part(int row) const {
    return (row >= 1 && row <= height()) ? parts_[static_cast<std::size_t>(row - 1)] : 0;
  }
  int height() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// A cell (a,b,c) of a multipartition diagram: row a >= 1, column b >= 1,
// component c in 0..d-1.
struct Node {
  int row = 1;
  int col = 1;
  int comp = 0;

  bool operator==(const Node&) const = default;
};

class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components);
  static Multipartition empty(int level);

  int level() const { return static_cast<int>(components_.size()); }
  const Partition& component(int c) const;
  const std::vector<Partition>& components() const { return components_; }
  int rank() const;
  bool contains(const Node& node) const;

  Multipartition with_node_added(const Node& node) const;
  Multipartition with_node_removed(const Node& node) const;

  // Text grammar: components joined by '|', parts joined by '.', the empty
  // component written '-'. Examples: "1|3.1|2.1.1", "-|2.1|1.1.1", "-".
  std::string to_string() const;
  static Multipartition parse(const std::string& text);

  bool operator==(const Multipartition&) const = default;
  // Canonical total order: by rank, then component by component, comparing
  // parts row by row with missing rows read as 0 and larger parts first.
  bool operator<(const Multipartition& other) const;

 private:
  std::vector<Partition> components_;
};

std::ostream& operator<<(std::ostream& os, const Multipartition& mp);

// Unreduced content b - a + v_c; the residue is its reduction mod e.
int content(const Node& node, const ParamSet& params);
Residue residue(const Node& node, const ParamSet& params);

// Strict "above" order on nodes: smaller content is above, ties broken by
// larger component index.
bool is_above(const Node& g, const Node& g2, const ParamSet& params);

// Addable/removable cells, sorted above-first. The two-argument overloads
// return all residues, the three-argument ones filter by residue.
std::vector<Node> addable_nodes(const Multipartition& mp, const ParamSet& params);
std::vector<Node> addable_nodes(const Multipartition& mp, Residue i, const ParamSet& params);
std::vector<Node> removable_nodes(const Multipartition& mp, const ParamSet& params);
std::vector<Node> removable_nodes(const Multipartition& mp, Residue i, const ParamSet& params);

// The node gamma with [mu] = [lam] + {gamma}; throws diagram_error if mu is
// not lam plus exactly one node.
Node added_node(const Multipartition& lam, const Multipartition& mu);

// Counting statistics entering the module action, all relative to the node
// gamma with [mu] = [lam] + {gamma} (gamma itself is excluded from both the
// "above" and the "below" counts):
//   node_balance_above = #{addable i-nodes of lam above gamma}
//                      - #{removable i-nodes of mu above gamma}
//   node_balance_below = the same with "below"
//   node_balance(mp)   = #{addable i-nodes} - #{removable i-nodes}
//   zero_node_count    = #{0-nodes of mp}
int node_balance_above(const Multipartition& lam, const Multipartition& mu, Residue i,
                       const ParamSet& params);
int node_balance_below(const Multipartition& lam, const Multipartition& mu, Residue i,
                       const ParamSet& params);
int node_balance(const Multipartition& mp, Residue i, const ParamSet& params);
int zero_node_count(const Multipartition& mp, const ParamSet& params);

// All multipartitions with the given number of components and total rank,
// each exactly once, in the canonical total order.
std::vector<Multipartition> enumerate_multipartitions(int n, int level);

}  // namespace fockcb
