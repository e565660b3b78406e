#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "baxter/errors.hpp"
#include "baxter/permutation.hpp"

namespace baxter {

// Unlabelled rooted plane binary tree. Immutable; copies share structure.
class BinaryTree {
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    NodePtr left, right;
    int count;
  };

 public:
  BinaryTree() = default;  // the empty tree

  static BinaryTree node(BinaryTree left, BinaryTree right) {
    int count = left.node_count() + right.node_count() + 1;
    return BinaryTree(std::make_shared<const Node>(
        Node{std::move(left.n_), std::move(right.n_), count}));
  }
  static BinaryTree leaf() { return node(BinaryTree{}, BinaryTree{}); }

  bool is_empty() const { return !n_; }
  bool is_leaf() const { return n_ && !n_->left && !n_->right; }
  BinaryTree left() const { return BinaryTree(n_->left); }
  BinaryTree right() const { return BinaryTree(n_->right); }
  int node_count() const { return n_ ? n_->count : 0; }

  friend bool operator==(const BinaryTree& a, const BinaryTree& b) {
    if (a.n_ == b.n_) return true;
    if (!a.n_ || !b.n_ || a.n_->count != b.n_->count) return false;
    return a.left() == b.left() && a.right() == b.right();
  }

 private:
  explicit BinaryTree(NodePtr n) : n_(std::move(n)) {}
  NodePtr n_;
};

// Canonical form: empty = "-", node = "(L R)"; the single node is "(- -)".
inline void serialize_into(const BinaryTree& t, std::string& out) {
  if (t.is_empty()) {
    out += '-';
    return;
  }
  out += '(';
  serialize_into(t.left(), out);
  out += ' ';
  serialize_into(t.right(), out);
  out += ')';
}

inline std::string serialize(const BinaryTree& t) {
  std::string out;
  serialize_into(t, out);
  return out;
}

namespace detail {
inline BinaryTree parse_tree_at(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) fail(errc::malformed, "truncated tree literal");
  if (s[pos] == '-') {
    ++pos;
    return BinaryTree{};
  }
  if (s[pos] != '(') fail(errc::malformed, "expected '(' or '-'");
  ++pos;
  BinaryTree l = parse_tree_at(s, pos);
  if (pos >= s.size() || s[pos] != ' ') fail(errc::malformed, "expected ' '");
  ++pos;
  BinaryTree r = parse_tree_at(s, pos);
  if (pos >= s.size() || s[pos] != ')') fail(errc::malformed, "expected ')'");
  ++pos;
  return BinaryTree::node(std::move(l), std::move(r));
}
}  // namespace detail

inline BinaryTree parse_tree(std::string_view s) {
  std::size_t pos = 0;
  BinaryTree t = detail::parse_tree_at(s, pos);
  if (pos != s.size()) fail(errc::malformed, "trailing characters in tree literal");
  return t;
}

inline bool tree_less(const BinaryTree& a, const BinaryTree& b) {
  return serialize(a) < serialize(b);
}

inline bool is_complete(const BinaryTree& t) {
  if (t.is_empty()) return false;
  if (t.is_leaf()) return true;
  return !t.left().is_empty() && !t.right().is_empty() &&
         is_complete(t.left()) && is_complete(t.right());
}

inline BinaryTree mirror(const BinaryTree& t) {
  if (t.is_empty()) return t;
  return BinaryTree::node(mirror(t.right()), mirror(t.left()));
}

// Drop every leaf of a complete tree; 2n+1 nodes -> n nodes.
inline BinaryTree trunc(const BinaryTree& t) {
  if (!is_complete(t)) fail(errc::not_complete, "trunc needs a complete tree");
  if (t.is_leaf()) return BinaryTree{};
  return BinaryTree::node(trunc(t.left()), trunc(t.right()));
}

// Add leaves below every missing child; n nodes -> 2n+1 nodes.
inline BinaryTree extend(const BinaryTree& t) {
  if (t.is_empty()) return BinaryTree::leaf();
  return BinaryTree::node(extend(t.left()), extend(t.right()));
}

namespace detail {
// Infix scan of leaves: '1' for a left child, '0' for a right child.
inline void leaf_directions(const BinaryTree& t, bool from_left, bool is_root,
                            std::string& out) {
  if (t.is_leaf()) {
    if (!is_root) out += from_left ? '1' : '0';
    return;
  }
  leaf_directions(t.left(), true, false, out);
  leaf_directions(t.right(), false, false, out);
}
}  // namespace detail

// Leaf code: left-to-right pattern of leaves, excluding the left-most left
// leaf and right-most right leaf.
inline std::string code(const BinaryTree& t) {
  if (!is_complete(t)) fail(errc::not_complete, "code needs a complete tree");
  std::string all;
  detail::leaf_directions(t, false, true, all);
  if (all.empty()) return all;  // the single node
  return all.substr(1, all.size() - 2);
}

// (left leaves, right leaves) of a complete tree.
inline std::pair<int, int> leaf_counts(const BinaryTree& t) {
  if (!is_complete(t)) fail(errc::not_complete, "leaf_counts needs a complete tree");
  std::string all;
  detail::leaf_directions(t, false, true, all);
  int left = 0, right = 0;
  for (char c : all) (c == '1' ? left : right)++;
  return {left, right};
}

inline std::string complement_word(std::string w) {
  for (char& c : w) c = (c == '0') ? '1' : '0';
  return w;
}

struct TwinPair {
  BinaryTree left, right;
  friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

inline std::string serialize(const TwinPair& p) {
  return serialize(p.left) + "|" + serialize(p.right);
}

inline bool is_twin(const BinaryTree& l, const BinaryTree& r) {
  if (!is_complete(l) || !is_complete(r))
    fail(errc::not_complete, "twin test needs complete trees");
  if (l.node_count() != r.node_count())
    fail(errc::size_mismatch, "twin trees must have equal size");
  return code(r) == complement_word(code(l));
}

inline TwinPair make_twin(BinaryTree l, BinaryTree r) {
  if (!is_twin(l, r)) fail(errc::not_twin, "leaf codes are not complementary");
  return TwinPair{std::move(l), std::move(r)};
}

// Mirror both trees and swap them; an involution on pairs of complete trees
// that restricts to twin pairs.
inline TwinPair involute_pair(const TwinPair& p) {
  return TwinPair{mirror(p.right), mirror(p.left)};
}

// Min-rooted recursive shape of a word with distinct letters.
inline BinaryTree incr_tree(std::span<const int> word) {
  if (word.empty()) return BinaryTree{};
  std::size_t m = 0;
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word[i] < word[m]) m = i;
  return BinaryTree::node(incr_tree(word.first(m)),
                          incr_tree(word.subspan(m + 1)));
}

// Max-rooted recursive shape.
inline BinaryTree decr_tree(std::span<const int> word) {
  if (word.empty()) return BinaryTree{};
  std::size_t m = 0;
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word[i] > word[m]) m = i;
  return BinaryTree::node(decr_tree(word.first(m)),
                          decr_tree(word.subspan(m + 1)));
}

inline std::pair<BinaryTree, BinaryTree> psi(const Permutation& w) {
  return {incr_tree(w.one_line()), decr_tree(w.one_line())};
}

inline TwinPair psi_twin(const Permutation& w) {
  if (!is_baxter(w)) fail(errc::not_baxter, w.str() + " is not Baxter");
  auto [a, b] = psi(w);
  return make_twin(extend(a), extend(b));
}

namespace detail {
enum class MissingSide { none, left, right, many };

inline MissingSide scan_single_child(const BinaryTree& t) {
  if (t.is_empty() || t.is_leaf()) return MissingSide::none;
  MissingSide found = MissingSide::none;
  auto merge = [&](MissingSide s) {
    if (s == MissingSide::none) return;
    found = (found == MissingSide::none) ? s : MissingSide::many;
  };
  if (t.left().is_empty() != t.right().is_empty())
    merge(t.left().is_empty() ? MissingSide::left : MissingSide::right);
  if (!t.left().is_empty()) merge(scan_single_child(t.left()));
  if (!t.right().is_empty()) merge(scan_single_child(t.right()));
  return found;
}

inline BinaryTree fill_single_child(const BinaryTree& t) {
  if (t.is_empty() || t.is_leaf()) return t;
  if (t.left().is_empty()) return BinaryTree::node(BinaryTree::leaf(), fill_single_child(t.right()));
  if (t.right().is_empty()) return BinaryTree::node(fill_single_child(t.left()), BinaryTree::leaf());
  return BinaryTree::node(fill_single_child(t.left()), fill_single_child(t.right()));
}
}  // namespace detail

// Completes a tree that is one leaf short of complete: exactly one node has
// a single child, on the given side.
inline BinaryTree complete_with_left_leaf(const BinaryTree& t) {
  if (detail::scan_single_child(t) != detail::MissingSide::left)
    fail(errc::not_in_image, "tree is not missing exactly one left leaf");
  return detail::fill_single_child(t);
}

inline BinaryTree complete_with_right_leaf(const BinaryTree& t) {
  if (detail::scan_single_child(t) != detail::MissingSide::right)
    fail(errc::not_in_image, "tree is not missing exactly one right leaf");
  return detail::fill_single_child(t);
}

// For an alternating permutation of even length, the increasing tree is one
// left leaf short of complete and the decreasing tree one right leaf short.
inline std::pair<BinaryTree, BinaryTree> completed_psi(const Permutation& w) {
  auto [a, b] = psi(w);
  return {complete_with_left_leaf(a), complete_with_right_leaf(b)};
}

// All binary trees with n nodes, sorted canonically.
inline std::vector<BinaryTree> all_binary_trees(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<BinaryTree>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto build = [](auto&& self, int m) -> const std::vector<BinaryTree>& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<BinaryTree> out;
    if (m == 0) {
      out.push_back(BinaryTree{});
    } else {
      for (int ln = 0; ln < m; ++ln)
        for (const BinaryTree& l : self(self, ln))
          for (const BinaryTree& r : self(self, m - 1 - ln))
            out.push_back(BinaryTree::node(l, r));
    }
    std::sort(out.begin(), out.end(), tree_less);
    return cache.emplace(m, std::move(out)).first->second;
  };
  return build(build, n);
}

// All complete trees with the given (odd) node count.
inline std::vector<BinaryTree> all_complete_trees(int nodes) {
  if (nodes % 2 == 0) fail(errc::malformed, "complete trees have odd size");
  std::vector<BinaryTree> out;
  for (const BinaryTree& t : all_binary_trees((nodes - 1) / 2))
    out.push_back(extend(t));
  std::sort(out.begin(), out.end(), tree_less);
  return out;
}

// All twin pairs of complete trees with 2n+1 nodes.
inline std::vector<TwinPair> all_twin_pairs(int n) {
  std::vector<BinaryTree> trees = all_complete_trees(2 * n + 1);
  std::map<std::string, std::vector<const BinaryTree*>> by_code;
  for (const BinaryTree& t : trees) by_code[code(t)].push_back(&t);
  std::vector<TwinPair> out;
  for (const BinaryTree& l : trees) {
    auto it = by_code.find(complement_word(code(l)));
    if (it == by_code.end()) continue;
    for (const BinaryTree* r : it->second) out.push_back(TwinPair{l, *r});
  }
  std::sort(out.begin(), out.end(), [](const TwinPair& a, const TwinPair& b) {
    return serialize(a) < serialize(b);
  });
  return out;
}

namespace detail {
inline const std::map<std::string, Permutation>& alt_psi_table(int len) {
  static std::mutex mu;
  static std::map<int, std::map<std::string, Permutation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(len);
  if (it != cache.end()) return it->second;
  std::map<std::string, Permutation> table;
  for (const Permutation& w : enumerate(PermFamily::alt_baxter, len)) {
    auto [l, r] = completed_psi(w);
    table.emplace(serialize(l) + "|" + serialize(r), w);
  }
  return cache.emplace(len, std::move(table)).first->second;
}

inline const std::map<std::string, Permutation>& baxter_psi_table(int n) {
  static std::mutex mu;
  static std::map<int, std::map<std::string, Permutation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::map<std::string, Permutation> table;
  for (const Permutation& w : enumerate(PermFamily::baxter, n))
    table.emplace(serialize(psi_twin(w)), w);
  return cache.emplace(n, std::move(table)).first->second;
}
}  // namespace detail

// Inverse of the completed tree-pair map, tabulated per size over the
// alternating Baxter permutations.
inline Permutation psi_inverse_complete(const BinaryTree& l,
                                        const BinaryTree& r) {
  if (!is_complete(l) || !is_complete(r))
    fail(errc::not_complete, "need complete trees");
  if (l.node_count() != r.node_count())
    fail(errc::size_mismatch, "trees must have equal size");
  int len = l.node_count() - 1;
  require_within(len, desk_limits().max_alt_len, "alternating length");
  const auto& table = detail::alt_psi_table(len);
  auto it = table.find(serialize(l) + "|" + serialize(r));
  if (it == table.end())
    fail(errc::not_in_image, "pair is not the image of an alternating Baxter permutation");
  return it->second;
}

// Inverse of psi_twin on twin pairs, tabulated per size.
inline Permutation psi_inverse_baxter(const TwinPair& p) {
  int n = (p.left.node_count() - 1) / 2;
  require_within(n, desk_limits().max_perm_n, "n");
  const auto& table = detail::baxter_psi_table(n);
  auto it = table.find(serialize(p));
  if (it == table.end())
    fail(errc::not_in_image, "pair is not the image of a Baxter permutation");
  return it->second;
}

}  // namespace baxter
