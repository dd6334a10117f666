#include "fockcb/multipartition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace fockcb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    bool ok = parts_[r] > 0 && (r == 0 || parts_[r - 1] >= parts_[r]);
    if (!ok) throw diagram_error("partition parts must be positive and weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw diagram_error("a multipartition needs at least one component");
}

Multipartition Multipartition::empty(int level) {
  if (level < 1) throw diagram_error("the level must be positive");
  return Multipartition(std::vector<Partition>(static_cast<std::size_t>(level)));
}

const Partition& Multipartition::component(int c) const {
  if (c < 0 || c >= level()) throw diagram_error("component index out of range");
  return components_[static_cast<std::size_t>(c)];
}

int Multipartition::rank() const {
  int total = 0;
  for (const Partition& comp : components_) total += comp.size();
  return total;
}

bool Multipartition::contains(const Node& node) const {
  return node.comp >= 0 && node.comp < level() && node.row >= 1 && node.col >= 1 &&
         node.col <= component(node.comp).part(node.row);
}

Multipartition Multipartition::with_node_added(const Node& node) const {
  if (node.comp < 0 || node.comp >= level()) throw diagram_error("component index out of range");
  const Partition& comp = components_[static_cast<std::size_t>(node.comp)];
  bool addable = node.row >= 1 && node.col == comp.part(node.row) + 1 &&
                 (node.row == 1 || comp.part(node.row - 1) >= node.col);
  if (!addable) throw diagram_error("node is not addable");
  std::vector<int> parts = comp.parts();
  if (node.row == comp.height() + 1)
    parts.push_back(1);
  else
    parts[static_cast<std::size_t>(node.row - 1)] += 1;
  std::vector<Partition> comps = components_;
  comps[static_cast<std::size_t>(node.comp)] = Partition(std::move(parts));
  return Multipartition(std::move(comps));
}

Multipartition Multipartition::with_node_removed(const Node& node) const {
  if (node.comp < 0 || node.comp >= level()) throw diagram_error("component index out of range");
  const Partition& comp = components_[static_cast<std::size_t>(node.comp)];
  bool removable = node.row >= 1 && node.col >= 1 && node.col == comp.part(node.row) &&
                   comp.part(node.row + 1) < node.col;
  if (!removable) throw diagram_error("node is not removable");
  std::vector<int> parts = comp.parts();
  parts[static_cast<std::size_t>(node.row - 1)] -= 1;
  std::vector<Partition> comps = components_;
  comps[static_cast<std::size_t>(node.comp)] = Partition(std::move(parts));
  return Multipartition(std::move(comps));
}

std::string Multipartition::to_string() const {
  std::ostringstream os;
  for (int c = 0; c < level(); ++c) {
    if (c > 0) os << '|';
    const Partition& comp = components_[static_cast<std::size_t>(c)];
    if (comp.empty()) {
      os << '-';
    } else {
      for (int row = 1; row <= comp.height(); ++row) {
        if (row > 1) os << '.';
        os << comp.part(row);
      }
    }
  }
  return os.str();
}

Multipartition Multipartition::parse(const std::string& text) {
  if (text.empty()) throw usage_error("empty multipartition string");
  std::vector<Partition> comps;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('|', begin);
    if (end == std::string::npos) end = text.size();
    std::string piece = text.substr(begin, end - begin);
    if (piece == "-") {
      comps.emplace_back();
    } else {
      std::vector<int> parts;
      std::size_t part_begin = 0;
      if (piece.empty()) throw usage_error("empty component in multipartition string");
      while (part_begin <= piece.size()) {
        std::size_t part_end = piece.find('.', part_begin);
        if (part_end == std::string::npos) part_end = piece.size();
        std::string token = piece.substr(part_begin, part_end - part_begin);
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
          throw usage_error("malformed part '" + token + "' in multipartition string");
        int value = std::stoi(token);
        if (value < 1) throw usage_error("parts must be positive in multipartition string");
        parts.push_back(value);
        part_begin = part_end + 1;
      }
      try {
        comps.emplace_back(std::move(parts));
      } catch (const diagram_error& ex) {
        throw usage_error(std::string(ex.what()) + " in '" + piece + "'");
      }
    }
    begin = end + 1;
  }
  return Multipartition(std::move(comps));
}

bool Multipartition::operator<(const Multipartition& other) const {
  if (rank() != other.rank()) return rank() < other.rank();
  if (level() != other.level()) return level() < other.level();
  for (int c = 0; c < level(); ++c) {
    const Partition& x = components_[static_cast<std::size_t>(c)];
    const Partition& y = other.components_[static_cast<std::size_t>(c)];
    int rows = std::max(x.height(), y.height());
    for (int row = 1; row <= rows; ++row)
      if (x.part(row) != y.part(row)) return x.part(row) > y.part(row);
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const Multipartition& mp) {
  return os << mp.to_string();
}

int content(const Node& node, const ParamSet& params) {
  return node.col - node.row + params.charge(node.comp);
}

Residue residue(const Node& node, const ParamSet& params) {
  return Residue::reduce(content(node, params), params.e());
}

bool is_above(const Node& g, const Node& g2, const ParamSet& params) {
  int c = content(g, params), c2 = content(g2, params);
  return c < c2 || (c == c2 && g.comp > g2.comp);
}

namespace {

void check_level(const Multipartition& mp, const ParamSet& params) {
  if (mp.level() != params.level())
    throw diagram_error("multipartition level does not match the parameter set");
}

void sort_above_first(std::vector<Node>& nodes, const ParamSet& params) {
  std::sort(nodes.begin(), nodes.end(),
            [&](const Node& x, const Node& y) { return is_above(x, y, params); });
}

void check_residue(Residue i, const ParamSet& params) {
  if (i.value() >= params.e())
    throw precondition_error("residue " + std::to_string(i.value()) + " is out of range for e=" +
                             std::to_string(params.e()));
}

std::vector<Node> filter_residue(std::vector<Node> nodes, Residue i, const ParamSet& params) {
  check_residue(i, params);
  std::erase_if(nodes, [&](const Node& node) { return residue(node, params) != i; });
  return nodes;
}

}  // namespace

std::vector<Node> addable_nodes(const Multipartition& mp, const ParamSet& params) {
  check_level(mp, params);
  std::vector<Node> out;
  for (int c = 0; c < mp.level(); ++c) {
    const Partition& comp = mp.component(c);
    for (int row = 1; row <= comp.height(); ++row)
      if (row == 1 || comp.part(row - 1) > comp.part(row))
        out.push_back(Node{row, comp.part(row) + 1, c});
    out.push_back(Node{comp.height() + 1, 1, c});
  }
  sort_above_first(out, params);
  return out;
}

std::vector<Node> addable_nodes(const Multipartition& mp, Residue i, const ParamSet& params) {
  return filter_residue(addable_nodes(mp, params), i, params);
}

std::vector<Node> removable_nodes(const Multipartition& mp, const ParamSet& params) {
  check_level(mp, params);
  std::vector<Node> out;
  for (int c = 0; c < mp.level(); ++c) {
    const Partition& comp = mp.component(c);
    for (int row = 1; row <= comp.height(); ++row)
      if (comp.part(row) > comp.part(row + 1)) out.push_back(Node{row, comp.part(row), c});
  }
  sort_above_first(out, params);
  return out;
}

std::vector<Node> removable_nodes(const Multipartition& mp, Residue i, const ParamSet& params) {
  return filter_residue(removable_nodes(mp, params), i, params);
}

Node added_node(const Multipartition& lam, const Multipartition& mu) {
  if (lam.level() != mu.level())
    throw diagram_error("multipartitions have different numbers of components");
  bool found = false;
  Node node;
  for (int c = 0; c < lam.level(); ++c) {
    const Partition& x = lam.component(c);
    const Partition& y = mu.component(c);
    int rows = std::max(x.height(), y.height());
    for (int row = 1; row <= rows; ++row) {
      int diff = y.part(row) - x.part(row);
      if (diff == 0) continue;
      if (diff != 1 || found)
        throw diagram_error("diagrams do not differ by exactly one node");
      found = true;
      node = Node{row, y.part(row), c};
    }
  }
  if (!found) throw diagram_error("diagrams do not differ by exactly one node");
  return node;
}

namespace {

int count_above(const std::vector<Node>& nodes, const Node& g, const ParamSet& params) {
  int total = 0;
  for (const Node& node : nodes)
    if (is_above(node, g, params)) ++total;
  return total;
}

int count_below(const std::vector<Node>& nodes, const Node& g, const ParamSet& params) {
  int total = 0;
  for (const Node& node : nodes)
    if (is_above(g, node, params)) ++total;
  return total;
}

Node checked_added_node(const Multipartition& lam, const Multipartition& mu, Residue i,
                        const ParamSet& params) {
  check_residue(i, params);
  Node g = added_node(lam, mu);
  if (residue(g, params) != i)
    throw diagram_error("the added node does not carry the requested residue");
  return g;
}

}  // namespace

int node_balance_above(const Multipartition& lam, const Multipartition& mu, Residue i,
                       const ParamSet& params) {
  Node g = checked_added_node(lam, mu, i, params);
  return count_above(addable_nodes(lam, i, params), g, params) -
         count_above(removable_nodes(mu, i, params), g, params);
}

int node_balance_below(const Multipartition& lam, const Multipartition& mu, Residue i,
                       const ParamSet& params) {
  Node g = checked_added_node(lam, mu, i, params);
  return count_below(addable_nodes(lam, i, params), g, params) -
         count_below(removable_nodes(mu, i, params), g, params);
}

int node_balance(const Multipartition& mp, Residue i, const ParamSet& params) {
  return static_cast<int>(addable_nodes(mp, i, params).size()) -
         static_cast<int>(removable_nodes(mp, i, params).size());
}

int zero_node_count(const Multipartition& mp, const ParamSet& params) {
  check_level(mp, params);
  int total = 0;
  for (int c = 0; c < mp.level(); ++c) {
    const Partition& comp = mp.component(c);
    for (int row = 1; row <= comp.height(); ++row)
      for (int col = 1; col <= comp.part(row); ++col)
        if (residue(Node{row, col, c}, params).value() == 0) ++total;
  }
  return total;
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    acc.push_back(part);
    gen_partitions(n - part, part, acc, out);
    acc.pop_back();
  }
}

void gen_components(int c, int level, int remaining,
                    const std::vector<std::vector<Partition>>& per_rank,
                    std::vector<Partition>& acc, std::vector<Multipartition>& out) {
  if (c == level - 1) {
    for (const Partition& last : per_rank[static_cast<std::size_t>(remaining)]) {
      acc.push_back(last);
      out.emplace_back(acc);
      acc.pop_back();
    }
    return;
  }
  for (int m = 0; m <= remaining; ++m) {
    for (const Partition& comp : per_rank[static_cast<std::size_t>(m)]) {
      acc.push_back(comp);
      gen_components(c + 1, level, remaining - m, per_rank, acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<Multipartition> enumerate_multipartitions(int n, int level) {
  if (n < 0) throw precondition_error("rank must be nonnegative");
  if (level < 1) throw diagram_error("the level must be positive");
  std::vector<std::vector<Partition>> per_rank(static_cast<std::size_t>(n) + 1);
  std::vector<int> parts;
  for (int m = 0; m <= n; ++m) gen_partitions(m, m, parts, per_rank[static_cast<std::size_t>(m)]);
  std::vector<Multipartition> out;
  std::vector<Partition> acc;
  acc.reserve(static_cast<std::size_t>(level));
  gen_components(0, level, n, per_rank, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fockcb
