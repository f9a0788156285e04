#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unordered_set>

#include "scgd/sidon.hpp"

using namespace scgd;

TEST_CASE("greedy prefixes match the hand-traced values") {
  const BhSequence b2 = greedy_bh(2, 5);
  CHECK(b2.terms == std::vector<std::int64_t>{1, 2, 4, 8, 13});
  const BhSequence b3 = greedy_bh(3, 4);
  CHECK(b3.terms == std::vector<std::int64_t>{1, 2, 5, 14});
  CHECK(greedy_bh(4, 1).terms == std::vector<std::int64_t>{1});
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(greedy_bh(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(greedy_bh(2, 0), std::invalid_argument);
}

TEST_CASE("longer greedy prefixes survive the exhaustive check") {
  for (const int h : {2, 3}) {
    const BhSequence seq = greedy_bh(h, 18);
    const BhCheck chk = verify_bh(seq.terms, h);
    CHECK(chk.ok);
  }
}

TEST_CASE("the exhaustive check finds collisions") {
  // 1 + 4 = 2 + 3.
  const BhCheck chk = verify_bh({1, 2, 3, 4}, 2);
  CHECK_FALSE(chk.ok);
  REQUIRE(chk.lhs.size() == 2);
  REQUIRE(chk.rhs.size() == 2);
  CHECK(chk.lhs != chk.rhs);
  CHECK(chk.lhs[0] + chk.lhs[1] == chk.rhs[0] + chk.rhs[1]);
  CHECK(verify_bh({1, 2, 5}, 3).ok);
  CHECK_FALSE(verify_bh({1, 2, 3}, 2).ok);  // 1 + 3 = 2 + 2
}

TEST_CASE("every greedy term is minimal") {
  const int h = 3;
  const BhSequence seq = greedy_bh(h, 8);
  // Any smaller candidate must collide: all 3-term sums with the candidate
  // either repeat among themselves or land on a sum of the prefix.
  for (std::size_t i = 1; i < seq.terms.size(); ++i) {
    const std::vector<std::int64_t> prefix(seq.terms.begin(),
                                           seq.terms.begin() + i);
    std::unordered_set<std::int64_t> prefix_sums;
    for (std::size_t a = 0; a < i; ++a)
      for (std::size_t b = a; b < i; ++b)
        for (std::size_t c = b; c < i; ++c)
          prefix_sums.insert(prefix[a] + prefix[b] + prefix[c]);
    for (std::int64_t cand = prefix.back() + 1; cand < seq.terms[i]; ++cand) {
      std::unordered_set<std::int64_t> with_cand;
      bool collision = false;
      auto add = [&](std::int64_t sum) {
        collision = collision || prefix_sums.count(sum) || !with_cand.insert(sum).second;
      };
      add(3 * cand);
      for (std::size_t a = 0; a < i; ++a) {
        add(2 * cand + prefix[a]);
        for (std::size_t b = a; b < i; ++b) add(cand + prefix[a] + prefix[b]);
      }
      CHECK_MESSAGE(collision, "candidate ", cand, " below term ", seq.terms[i],
                    " would have been admissible");
    }
  }
}

TEST_CASE("growth ratio stays bounded") {
  const BhSequence seq = greedy_bh(3, 40);
  CHECK(bh_growth_ratio(seq) <= 2.0);
  CHECK(bh_growth_ratio(seq) > 0.0);
}
