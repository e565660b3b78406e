#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "baxter/binary_tree.hpp"
#include "baxter/qpoly.hpp"

using namespace baxter;

namespace {
long catalan(int n) {
  return static_cast<long>(binomial(2 * n, n) / (n + 1));
}
// the 11-node complete tree with leaf code 0010
BinaryTree figure3_tree() {
  BinaryTree ll = BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf());
  BinaryTree l = BinaryTree::node(ll, BinaryTree::leaf());
  BinaryTree rl = BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf());
  BinaryTree r = BinaryTree::node(rl, BinaryTree::leaf());
  return BinaryTree::node(l, r);
}
}  // namespace

TEST_CASE("serialize and parse") {
  CHECK(serialize(BinaryTree{}) == "-");
  CHECK(serialize(BinaryTree::leaf()) == "(- -)");
  BinaryTree t = figure3_tree();
  CHECK(parse_tree(serialize(t)) == t);
  CHECK_THROWS_AS(parse_tree("(- "), Error);
}

TEST_CASE("trunc and extend") {
  BinaryTree three = BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf());
  CHECK(trunc(three) == BinaryTree::leaf());
  CHECK(extend(BinaryTree::leaf()) == three);
  BinaryTree fig3 = figure3_tree();
  CHECK(fig3.node_count() == 11);
  BinaryTree t5 = trunc(fig3);
  CHECK(t5.node_count() == 5);
  CHECK(serialize(t5) == "(((- -) -) ((- -) -))");
  CHECK(extend(t5) == fig3);
  CHECK_THROWS_AS(trunc(BinaryTree::node(BinaryTree::leaf(), BinaryTree{})),
                  Error);
  for (const BinaryTree& t : all_binary_trees(5)) CHECK(trunc(extend(t)) == t);
}

TEST_CASE("leaf code") {
  CHECK(code(figure3_tree()) == "0010");
  CHECK(code(BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf())) == "");
  CHECK(code(extend(incr_tree(perm("12").one_line()))) == "1");
  CHECK(code(extend(incr_tree(perm("21").one_line()))) == "0");
}

TEST_CASE("leaf counts") {
  CHECK(leaf_counts(extend(incr_tree(perm("1234").one_line()))) ==
        std::pair<int, int>{4, 1});
  CHECK(leaf_counts(BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf())) ==
        std::pair<int, int>{1, 1});
  for (const Permutation& w : enumerate(PermFamily::baxter, 4)) {
    PermStats s = stats(w);
    auto [left, right] = leaf_counts(extend(incr_tree(w.one_line())));
    CHECK(left == s.ascents + 1);
    CHECK(right == s.descents + 1);
    if (s.ascents == 2 && s.descents == 1) CHECK(left == 3);
  }
}

TEST_CASE("increasing and decreasing trees") {
  CHECK(serialize(incr_tree(perm("1").one_line())) == "(- -)");
  // min-root of 43512: left subtree has two leaf children, right is a leaf
  CHECK(serialize(incr_tree(perm("43512").one_line())) ==
        "(((- -) (- -)) (- -))");
  CHECK(serialize(decr_tree(perm("12").one_line())) == "((- -) -)");
}

TEST_CASE("twin pairs") {
  for (const Permutation& w : enumerate(PermFamily::baxter, 7))
    CHECK(is_twin(extend(incr_tree(w.one_line())),
                  extend(decr_tree(w.one_line()))));
  BinaryTree t = figure3_tree();
  CHECK_FALSE(is_twin(t, t));  // nonempty code never equals its complement
  BinaryTree small = extend(BinaryTree::leaf());
  CHECK_THROWS_AS(is_twin(t, small), Error);
}

TEST_CASE("psi") {
  auto [a, b] = psi(perm("1"));
  CHECK(serialize(a) == "(- -)");
  CHECK(serialize(b) == "(- -)");
  CHECK_THROWS_AS(psi_twin(perm("2413")), Error);

  std::set<std::string> images;
  for (const Permutation& w : enumerate(PermFamily::baxter, 5))
    images.insert(serialize(psi_twin(w)));
  CHECK(images.size() == 92);  // injective on Bax_5
  // surjective onto the twin pairs
  auto twins = all_twin_pairs(5);
  CHECK(twins.size() == 92);
  for (const TwinPair& p : twins) CHECK(images.contains(serialize(p)));
}

TEST_CASE("pair involution") {
  CHECK(mirror(BinaryTree::leaf()) == BinaryTree::leaf());
  CHECK(serialize(involute_pair(psi_twin(perm("43512")))) ==
        serialize(psi_twin(perm("45132"))));
  for (const Permutation& w : enumerate(PermFamily::baxter, 6)) {
    TwinPair p = psi_twin(w);
    TwinPair q = involute_pair(p);
    CHECK(is_twin(q.left, q.right));
    CHECK(serialize(involute_pair(q)) == serialize(p));
    CHECK(serialize(q) == serialize(psi_twin(conjugate_w0(w))));
  }
}

TEST_CASE("mirror reverses the complemented code") {
  for (const BinaryTree& t : all_complete_trees(11)) {
    std::string c = complement_word(code(t));
    CHECK(code(mirror(t)) == std::string(c.rbegin(), c.rend()));
  }
}

TEST_CASE("complete pair counts and involution fixed points") {
  for (int n = 1; n <= 6; ++n) {
    auto trees = all_complete_trees(2 * n + 1);
    long c = catalan(n);
    CHECK(static_cast<long>(trees.size()) == c);
    if (n > 5) continue;  // fixed-point scan is quadratic in c
    long fixed = 0;
    for (const BinaryTree& l : trees)
      for (const BinaryTree& r : trees) {
        TwinPair p{l, r};
        TwinPair q = involute_pair(p);
        if (q.left == p.left && q.right == p.right) ++fixed;
      }
    CHECK(fixed == c);
  }
}

TEST_CASE("every complete pair comes from an alternating permutation") {
  for (int n = 1; n <= 5; ++n) {
    auto trees = all_complete_trees(2 * n + 1);
    std::set<Permutation> seen;
    for (const BinaryTree& l : trees)
      for (const BinaryTree& r : trees) {
        Permutation w = psi_inverse_complete(l, r);
        auto [a, b] = completed_psi(w);
        CHECK(a == l);
        CHECK(b == r);
        seen.insert(w);
      }
    CHECK(static_cast<long>(seen.size()) == catalan(n) * catalan(n));
  }
}

TEST_CASE("completed psi inverse") {
  Permutation w9 = perm("78354612");
  auto [l, r] = completed_psi(w9);
  CHECK(is_complete(l));
  CHECK(is_complete(r));
  CHECK(psi_inverse_complete(l, r) == w9);
  CHECK(conjugate_w0(w9) == w9);
  CHECK(mirror(r) == l);  // fixed pairs mirror each other

  BinaryTree three = extend(BinaryTree::leaf());
  CHECK(psi_inverse_complete(three, three) == perm("12"));

  for (const Permutation& w : enumerate(PermFamily::alt_baxter, 6)) {
    auto [a, b] = completed_psi(w);
    CHECK(psi_inverse_complete(a, b) == w);
  }
}

TEST_CASE("psi inverse for baxter permutations") {
  for (const Permutation& w : enumerate(PermFamily::baxter, 5))
    CHECK(psi_inverse_baxter(psi_twin(w)) == w);
}

TEST_CASE("psi is onto the twin pairs at n = 7") {
  auto twins = all_twin_pairs(7);
  CHECK(twins.size() == 2074);
  for (const TwinPair& p : twins)
    CHECK(serialize(psi_twin(psi_inverse_baxter(p))) == serialize(p));
}
