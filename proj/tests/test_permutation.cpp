#include <catch2/catch_amalgamated.hpp>

#include "baxter/permutation.hpp"

using namespace baxter;

TEST_CASE("vincular instances") {
  CHECK(vincular_instances(perm("25314"), Pattern::p2413).empty());
  CHECK(vincular_instances(perm("1234"), Pattern::p3142).empty());
  CHECK(vincular_instances(perm("1234"), Pattern::p2413).empty());
  CHECK(vincular_instances(perm("1234"), Pattern::p3412).empty());
  auto hits = vincular_instances(perm("2413"), Pattern::p2413);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0] == std::array<int, 4>{1, 2, 3, 4});
  // 25314 contains plain 2413 but not the vincular form
  CHECK_FALSE(is_baxter(perm("25314")) == false);
}

TEST_CASE("baxter membership") {
  CHECK_FALSE(is_baxter(perm("2413")));
  CHECK_FALSE(is_baxter(perm("3142")));
  CHECK(is_baxter(perm("1234")));
  int count = 0;
  std::vector<int> v{1, 2, 3, 4};
  do {
    Permutation w(v);
    bool b = is_baxter(w);
    if (b) ++count;
    bool excluded = (w == perm("2413") || w == perm("3142"));
    CHECK(b == !excluded);
  } while (std::next_permutation(v.begin(), v.end()));
  CHECK(count == 22);
}

TEST_CASE("twisted membership") {
  CHECK_FALSE(is_twisted_baxter(perm("3412")));
  CHECK_FALSE(is_twisted_baxter(perm("2413")));
  CHECK(is_twisted_baxter(perm("3142")));
  CHECK(enumerate(PermFamily::twisted, 4).size() == 22);
}

TEST_CASE("stats") {
  PermStats s = stats(perm("1234"));
  CHECK(s.ascents == 3);
  CHECK(s.descents == 0);
  CHECK(s.inv_ascents == 3);
  CHECK(s.inv_descents == 0);
  // inverse statistics match the statistics of the inverse
  for (const Permutation& w : enumerate(PermFamily::baxter, 5)) {
    PermStats a = stats(w), b = stats(inverse(w));
    CHECK(a.inv_ascents == b.ascents);
    CHECK(a.inv_descents == b.descents);
    CHECK(a.ascents + a.descents == w.size() - 1);
  }
  int count21 = 0;
  for (const Permutation& w : enumerate(PermFamily::baxter, 4)) {
    PermStats t = stats(w);
    if (t.ascents == 2 && t.descents == 1) ++count21;
  }
  CHECK(count21 == 10);
}

TEST_CASE("inverse and conjugation") {
  CHECK(inverse(perm("3124")) == perm("2314"));
  Permutation w0({4, 3, 2, 1});
  CHECK(conjugate_w0(w0) == w0);
  // the printed mate of 43512 is a typo: 35142 contains 3-14-2, so the true
  // conjugate must be the Baxter permutation 45132
  CHECK(conjugate_w0(perm("43512")) == perm("45132"));
  CHECK_FALSE(is_baxter(perm("35142")));
  CHECK(is_baxter(perm("45132")));
  CHECK(conjugate_w0(perm("2314")) == perm("1423"));

  for (const Permutation& w : enumerate(PermFamily::baxter, 5)) {
    Permutation c = conjugate_w0(w);
    CHECK(conjugate_w0(c) == w);
    CHECK(is_baxter(c));
    PermStats a = stats(w), b = stats(c);
    CHECK(a.ascents == b.ascents);
    CHECK(a.descents == b.descents);
    // reverse flips the descent count
    PermStats r = stats(reverse(w));
    CHECK(r.descents == w.size() - 1 - a.descents);
  }
  for (const Permutation& w : enumerate(PermFamily::twisted, 5))
    CHECK(is_twisted_baxter(conjugate_w0(w)));
}

TEST_CASE("baxter closed under inverse") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    long mismatches = 0;
    do {
      if (is_baxter(Permutation(v)) != is_baxter(inverse(Permutation(v))))
        ++mismatches;
    } while (std::next_permutation(v.begin(), v.end()));
    CHECK(mismatches == 0);
  }
}

TEST_CASE("conjugation preserves membership and statistics up to n = 8") {
  for (int n = 6; n <= 8; ++n) {
    for (const Permutation& w : enumerate(PermFamily::baxter, n)) {
      Permutation c = conjugate_w0(w);
      CHECK(is_baxter(c));
      PermStats a = stats(w), b = stats(c);
      CHECK(a.ascents == b.ascents);
      CHECK(a.descents == b.descents);
    }
  }
}

TEST_CASE("alternating") {
  CHECK(is_alternating(perm("2314")));
  CHECK_FALSE(is_alternating(perm("1234")));
  CHECK(is_alternating(perm("78354612")));
}

TEST_CASE("enumerate families") {
  CHECK(enumerate(PermFamily::baxter, 1) == std::vector<Permutation>{perm("1")});
  auto bax4 = enumerate(PermFamily::baxter, 4);
  CHECK(bax4.size() == 22);
  CHECK(std::is_sorted(bax4.begin(), bax4.end()));
  CHECK(std::find(bax4.begin(), bax4.end(), perm("2413")) == bax4.end());
  CHECK(std::find(bax4.begin(), bax4.end(), perm("3142")) == bax4.end());

  CHECK(enumerate(PermFamily::alt_baxter, 4).size() == 4);  // c_2^2
  CHECK(enumerate(PermFamily::alt_baxter, 6).size() == 25); // c_3^2

  auto k2 = enumerate(PermFamily::baxter, 4, 2);
  CHECK(k2.size() == 10);
  for (const Permutation& w : k2) CHECK(stats(w).ascents == 2);

  auto t2 = enumerate(PermFamily::twisted, 4, 2);
  CHECK(t2.size() == 10);
  for (const Permutation& w : t2) CHECK(stats(w).inv_ascents == 2);
}

TEST_CASE("pruned search equals plain filtering") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Permutation> bax, twisted, alt;
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    do {
      Permutation w(v);
      if (is_baxter(w)) bax.push_back(w);
      if (is_twisted_baxter(w)) twisted.push_back(w);
      if (n % 2 == 0 && is_alternating(w) && is_baxter(w)) alt.push_back(w);
    } while (std::next_permutation(v.begin(), v.end()));
    CHECK(enumerate(PermFamily::baxter, n) == bax);
    CHECK(enumerate(PermFamily::twisted, n) == twisted);
    if (n % 2 == 0) CHECK(enumerate(PermFamily::alt_baxter, n) == alt);
  }
}

TEST_CASE("enumerate respects limits and worker count") {
  CHECK_THROWS_AS(enumerate(PermFamily::baxter, desk_limits().max_perm_n + 1),
                  Error);
  int saved = worker_count_setting();
  set_worker_count(1);
  auto a = enumerate(PermFamily::baxter, 5);
  set_worker_count(4);
  auto b = enumerate(PermFamily::baxter, 5);
  set_worker_count(saved);
  CHECK(a == b);
}

TEST_CASE("decompose") {
  Decomposition d = decompose_at(perm("5671342"), 4);
  CHECK(d.prefix.empty());
  CHECK(d.side == DecompSide::p1_first);
  CHECK(d.upper == std::vector<int>{6, 7});
  CHECK(d.lower == std::vector<int>{1, 3});
  CHECK(d.suffix == std::vector<int>{2});
  CHECK(recompose(d) == perm("5671342"));

  Decomposition e = decompose_at(perm("12"), 1);
  CHECK(e.prefix.empty());
  CHECK(e.lower.empty());
  CHECK(e.upper.empty());
  CHECK(e.suffix.empty());
  CHECK(e.side == DecompSide::p_first);

  CHECK_THROWS_AS(decompose_at(perm("2413"), 2), Error);

  for (const Permutation& w : enumerate(PermFamily::baxter, 6))
    for (int p = 1; p < 6; ++p)
      CHECK(recompose(decompose_at(w, p)) == w);
}
