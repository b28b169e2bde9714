#include "abc/axis.hpp"

#include <algorithm>
#include <stdexcept>

namespace abc {

std::vector<int> Axis::positions() const {
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i] - 1] = static_cast<int>(i + 1);
  return pos;
}

namespace {

// PQ-tree over leaves 0..U-1. P-node children may be permuted freely, Q-node
// children only reversed. Each reduction rewrites the pertinent subtree with
// the standard templates, expressed recursively: a partial node below the
// pertinent root flattens into a sequence running from empty to full.
struct PQNode {
  enum class Kind { leaf, p, q };
  Kind kind = Kind::leaf;
  int leaf = -1;
  std::vector<PQNode> children;
  int full = 0;   // leaves of the current set below this node
  int total = 0;  // leaves below this node

  bool is_empty() const { return full == 0; }
  bool is_full() const { return full == total; }
  bool is_partial() const { return !is_empty() && !is_full(); }
};

PQNode make_leaf(int id) { return PQNode{PQNode::Kind::leaf, id, {}, 0, 1}; }

PQNode make_group(std::vector<PQNode> nodes, PQNode::Kind kind) {
  if (nodes.size() == 1) return std::move(nodes.front());
  PQNode n;
  n.kind = nodes.size() == 2 ? PQNode::Kind::p : kind;
  n.children = std::move(nodes);
  return n;
}

void annotate(PQNode& node, const std::vector<char>& in_set) {
  if (node.kind == PQNode::Kind::leaf) {
    node.total = 1;
    node.full = in_set[node.leaf] ? 1 : 0;
    return;
  }
  node.full = node.total = 0;
  for (auto& c : node.children) {
    annotate(c, in_set);
    node.full += c.full;
    node.total += c.total;
  }
}

// Appends the children of a partial, non-root node in empty-to-full order.
bool flatten_sided(PQNode node, std::vector<PQNode>& out) {
  if (node.kind == PQNode::Kind::p) {
    std::vector<PQNode> empty, full, partial;
    for (auto& c : node.children) {
      (c.is_empty() ? empty : c.is_full() ? full : partial).push_back(std::move(c));
    }
    if (partial.size() > 1) return false;
    if (!empty.empty()) out.push_back(make_group(std::move(empty), PQNode::Kind::p));
    if (!partial.empty() && !flatten_sided(std::move(partial.front()), out)) return false;
    if (!full.empty()) out.push_back(make_group(std::move(full), PQNode::Kind::p));
    return true;
  }
  // Q-node: children must read E* [partial] F*, possibly after reversal.
  const auto fits = [](const std::vector<PQNode>& ch) {
    std::size_t i = 0;
    while (i < ch.size() && ch[i].is_empty()) ++i;
    if (i < ch.size() && ch[i].is_partial()) ++i;
    while (i < ch.size() && ch[i].is_full()) ++i;
    return i == ch.size();
  };
  if (!fits(node.children)) {
    std::reverse(node.children.begin(), node.children.end());
    if (!fits(node.children)) return false;
  }
  for (auto& c : node.children) {
    if (c.is_partial()) {
      if (!flatten_sided(std::move(c), out)) return false;
    } else {
      out.push_back(std::move(c));
    }
  }
  return true;
}

bool reduce_root(PQNode& root) {
  if (root.kind == PQNode::Kind::p) {
    std::vector<PQNode> empty, full, partial;
    for (auto& c : root.children) {
      (c.is_empty() ? empty : c.is_full() ? full : partial).push_back(std::move(c));
    }
    if (partial.size() > 2) return false;
    std::vector<PQNode> segment;
    if (!partial.empty() && !flatten_sided(std::move(partial[0]), segment)) return false;
    if (!full.empty()) segment.push_back(make_group(std::move(full), PQNode::Kind::p));
    if (partial.size() == 2) {
      std::vector<PQNode> tail;
      if (!flatten_sided(std::move(partial[1]), tail)) return false;
      std::reverse(tail.begin(), tail.end());
      for (auto& t : tail) segment.push_back(std::move(t));
    }
    PQNode merged = make_group(std::move(segment), PQNode::Kind::q);
    if (empty.empty()) {
      root = std::move(merged);
    } else {
      empty.push_back(std::move(merged));
      root = make_group(std::move(empty), PQNode::Kind::p);
    }
    return true;
  }
  // Q root: E* [partial] F* [partial] E*.
  auto& ch = root.children;
  std::size_t first = 0;
  while (first < ch.size() && ch[first].is_empty()) ++first;
  std::size_t last = ch.size() - 1;
  while (last > first && ch[last].is_empty()) --last;
  for (std::size_t i = first + 1; i < last; ++i) {
    if (!ch[i].is_full()) return false;
  }
  std::vector<PQNode> rebuilt;
  for (std::size_t i = 0; i < ch.size(); ++i) {
    if (i == first && ch[i].is_partial()) {
      if (!flatten_sided(std::move(ch[i]), rebuilt)) return false;
    } else if (i == last && ch[i].is_partial()) {
      std::vector<PQNode> tail;
      if (!flatten_sided(std::move(ch[i]), tail)) return false;
      std::reverse(tail.begin(), tail.end());
      for (auto& t : tail) rebuilt.push_back(std::move(t));
    } else {
      rebuilt.push_back(std::move(ch[i]));
    }
  }
  root.children = std::move(rebuilt);
  return true;
}

bool reduce(PQNode& tree, const std::vector<int>& set, int universe) {
  if (set.size() <= 1) return true;
  std::vector<char> in_set(universe, 0);
  for (int x : set) in_set.at(x) = 1;
  annotate(tree, in_set);
  const int size = static_cast<int>(set.size());
  PQNode* node = &tree;
  for (;;) {
    if (node->is_full()) return true;
    auto it = std::find_if(node->children.begin(), node->children.end(),
                           [size](const PQNode& c) { return c.full == size; });
    if (it == node->children.end()) break;
    node = &*it;
  }
  return reduce_root(*node);
}

void frontier(const PQNode& node, std::vector<int>& out) {
  if (node.kind == PQNode::Kind::leaf) {
    out.push_back(node.leaf);
    return;
  }
  for (const auto& c : node.children) frontier(c, out);
}

bool contiguous_under(const std::vector<int>& positions, const std::vector<int>& members) {
  if (members.empty()) return true;
  int lo = positions[members.front() - 1];
  int hi = lo;
  for (int x : members) {
    lo = std::min(lo, positions[x - 1]);
    hi = std::max(hi, positions[x - 1]);
  }
  return hi - lo + 1 == static_cast<int>(members.size());
}

}  // namespace

std::optional<std::vector<int>> consecutive_ones_order(int universe, const std::vector<std::vector<int>>& sets) {
  if (universe <= 0) return std::vector<int>{};
  PQNode tree;
  if (universe == 1) {
    tree = make_leaf(0);
  } else {
    tree.kind = PQNode::Kind::p;
    for (int i = 0; i < universe; ++i) tree.children.push_back(make_leaf(i));
  }
  for (const auto& s : sets) {
    if (!reduce(tree, s, universe)) return std::nullopt;
  }
  std::vector<int> order;
  frontier(tree, order);
  return order;
}

bool axis_is_valid(const Election& e, const Axis& axis) {
  const int universe = axis.kind == AxisKind::sp ? e.num_candidates() : e.num_voters();
  if (static_cast<int>(axis.order.size()) != universe) return false;
  std::vector<int> sorted = axis.order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < universe; ++i) {
    if (sorted[i] != i + 1) return false;
  }
  const auto pos = axis.positions();
  if (axis.kind == AxisKind::sp) {
    return std::all_of(e.ballots().begin(), e.ballots().end(), [&](const Ballot& b) { return contiguous_under(pos, b); });
  }
  for (Candidate c = 1; c <= e.num_candidates(); ++c) {
    if (!contiguous_under(pos, e.approvers(c))) return false;
  }
  return true;
}

std::optional<Axis> find_axis(const Election& e, AxisKind kind) {
  std::vector<std::vector<int>> sets;
  int universe = 0;
  if (kind == AxisKind::sp) {
    universe = e.num_candidates();
    for (const Ballot& b : e.ballots()) {
      std::vector<int> s;
      for (Candidate c : b) s.push_back(c - 1);
      sets.push_back(std::move(s));
    }
  } else {
    universe = e.num_voters();
    for (Candidate c = 1; c <= e.num_candidates(); ++c) {
      std::vector<int> s;
      for (Voter i : e.approvers(c)) s.push_back(i - 1);
      sets.push_back(std::move(s));
    }
  }
  auto order = consecutive_ones_order(universe, sets);
  if (!order) return std::nullopt;
  Axis axis{kind, {}};
  for (int x : *order) axis.order.push_back(x + 1);
  if (!axis_is_valid(e, axis)) throw std::logic_error("consecutive-ones order failed verification");
  return axis;
}

std::string format_axis(const Axis& axis) { return format_members(axis.order); }

}  // namespace abc
