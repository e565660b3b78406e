#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "baxter/congruence.hpp"
#include "baxter/qpoly.hpp"

using namespace baxter;

TEST_CASE("moves") {
  CHECK(up_moves(perm("4125673")) == std::vector<Permutation>{perm("4152673")});
  CHECK(up_moves(perm("1234567")).empty());
  // the two lower neighbours of 4561723
  CHECK(down_moves(perm("4561723")) ==
        std::vector<Permutation>{perm("4516723"), perm("4561273")});
  CHECK(down_moves(perm("4567123")) ==
        std::vector<Permutation>{perm("4561723")});

  // moves never change the relative order of consecutive values
  for (const Permutation& w : enumerate(PermFamily::twisted, 5))
    for (const Permutation& v : congruence_up_moves(w))
      for (int i = 1; i < 5; ++i)
        CHECK((w.position_of(i) < w.position_of(i + 1)) ==
              (v.position_of(i) < v.position_of(i + 1)));
}

TEST_CASE("the class of 4125673") {
  Fiber f = fiber(perm("4125673"));
  CHECK(f.bottom == perm("4125673"));
  CHECK(f.top == perm("4567123"));
  // the printed picture of this class lists nine of the members; the move
  // closure (equivalently the weak-order interval) has one more, 4512673,
  // reached by 4125673 -> 4152673 -> 4512673
  std::vector<Permutation> printed{
      perm("4125673"), perm("4152673"), perm("4156273"), perm("4156723"),
      perm("4516273"), perm("4516723"), perm("4561273"), perm("4561723"),
      perm("4567123")};
  for (const Permutation& w : printed)
    CHECK(std::find(f.members.begin(), f.members.end(), w) != f.members.end());
  CHECK(f.members.size() == 10);
  CHECK(std::find(f.members.begin(), f.members.end(), perm("4512673")) !=
        f.members.end());
  // every member sits between the extremes in weak order
  for (const Permutation& w : f.members) {
    CHECK(weak_order_leq(f.bottom, w));
    CHECK(weak_order_leq(w, f.top));
  }
}

TEST_CASE("identity fiber") {
  Fiber f = fiber(perm("1234"));
  CHECK(f.members == std::vector<Permutation>{perm("1234")});
  CHECK(f.bottom == perm("1234"));
  CHECK(f.top == perm("1234"));
}

TEST_CASE("fibers partition the symmetric group") {
  for (int n = 1; n <= 5; ++n) {
    auto fibers = all_fibers(n);
    CHECK(static_cast<long>(fibers.size()) == static_cast<long>(baxter_number(n)));
    long total = 0;
    std::set<Permutation> seen;
    for (const Fiber& f : fibers) {
      total += static_cast<long>(f.members.size());
      seen.insert(f.members.begin(), f.members.end());
      CHECK(is_twisted_baxter(f.bottom));
      CHECK(is_baxter(f.top));
      // extremes are the unique members of their kind
      int nb = 0, nt = 0;
      for (const Permutation& m : f.members) {
        if (is_baxter(m)) ++nb;
        if (is_twisted_baxter(m)) ++nt;
      }
      CHECK(nb == 1);
      CHECK(nt == 1);
    }
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(total == fact);
    CHECK(static_cast<long>(seen.size()) == fact);
  }
}

TEST_CASE("twisted to baxter") {
  CHECK(twisted_to_baxter(perm("4125673")) == perm("4567123"));
  CHECK(twisted_to_baxter(perm("1234")) == perm("1234"));
  CHECK_THROWS_AS(twisted_to_baxter(perm("2413")), Error);
  CHECK_THROWS_AS(baxter_to_twisted(perm("3142")), Error);

  std::set<Permutation> image;
  for (const Permutation& w : enumerate(PermFamily::twisted, 5)) {
    Permutation v = twisted_to_baxter(w);
    CHECK(is_baxter(v));
    CHECK(baxter_to_twisted(v) == w);
    CHECK(stats(w).inv_descents == stats(v).inv_descents);
    // greedy agrees with the closure representative
    CHECK(fiber(w).top == v);
    image.insert(v);
  }
  CHECK(static_cast<long>(image.size()) ==
        static_cast<long>(baxter_number(5)));
}

TEST_CASE("conjugation maps fibers to fibers") {
  CHECK(fiber_involution_check(1));
  CHECK(fiber_involution_check(4));
  CHECK(fiber_involution_check(5));
  CHECK(fiber_involution_check(6));
}
