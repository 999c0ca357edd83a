#include <gtest/gtest.h>

#include "oracle.hpp"
#include "prefixgroup/clopen.hpp"
#include "prefixgroup/error.hpp"
#include "prefixgroup/literal.hpp"
#include "prefixgroup/random.hpp"

using namespace prefixgroup;

namespace {

ClopenSet C(const char *s, int k = 2) { return parse_clopen(s, k); }

}  // namespace

TEST(Word, BasicsAndOrder) {
  Word w("0110");
  EXPECT_EQ(w.size(), 4u);
  EXPECT_EQ(w.letter(1), 1);
  EXPECT_EQ(w.prefix(2).str(), "01");
  EXPECT_EQ(w.suffix_from(2).str(), "10");
  EXPECT_TRUE(Word("01").is_prefix_of(w));
  EXPECT_FALSE(Word("1").comparable(w));
  EXPECT_EQ(Word().str(), "e");
  EXPECT_TRUE(Word("1") > Word("011"));
  EXPECT_TRUE(LengthLexLess{}(Word("1"), Word("011")));
  EXPECT_THROW(check_arity(11), Error);
}

TEST(Clopen, CanonicalizeMergesAndAbsorbs) {
  EXPECT_EQ(ClopenSet::canonicalize({Word("00"), Word("01")}, 2).str(), "[0]");
  EXPECT_EQ(ClopenSet::canonicalize({Word("0"), Word("01")}, 2).str(), "[0]");
  EXPECT_TRUE(ClopenSet::canonicalize({Word("00"), Word("01"), Word("10"), Word("11")}, 2).is_full());
  EXPECT_EQ(ClopenSet::canonicalize({Word("00"), Word("01")}, 3).str(), "[00,01]");
  EXPECT_THROW(ClopenSet::canonicalize({Word("02")}, 2), Error);
}

TEST(Clopen, BooleanOps) {
  EXPECT_EQ(complement(C("[0]")), C("[1]"));
  EXPECT_EQ(set_intersect(C("[0]"), C("[01,1]")), C("[01]"));
  const ClopenSet u = set_union(C("[00]"), C("[01,10]"));
  EXPECT_EQ(u, C("[0,10]"));
  EXPECT_TRUE(oracle::same_set(u, C("[0,10]")));
  EXPECT_TRUE(complement(ClopenSet::full(2)).is_empty());
  EXPECT_TRUE(is_subset(C("[010]"), C("[01]")));
  EXPECT_TRUE(are_disjoint(C("[00,11]"), C("[01,10]")));
  EXPECT_EQ(set_difference(C("[0]"), C("[00]")), C("[01]"));
  EXPECT_THROW(set_union(C("[0]"), C("[0]", 3)), Error);
}

TEST(Clopen, SplitToSize) {
  const auto one = split_to_size(C("[0]"), 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].str(), "0");
  const auto three = split_to_size(C("[0]"), 3);
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(ClopenSet::canonicalize(three, 2), C("[0]"));
  EXPECT_EQ(three[0].str(), "00");
  try {
    split_to_size(C("[0]", 3), 2);
    FAIL() << "expected infeasible size";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::InfeasibleSize);
  }
  EXPECT_EQ(reachable_size(C("[0]", 3), 2), 3u);
}

TEST(ClopenProperty, OpsAgreeWithPointEvaluation) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const ClopenSet a = random_clopen(rng, 2, 5);
    const ClopenSet b = random_clopen(rng, 2, 5);
    const ClopenSet u = set_union(a, b), n = set_intersect(a, b), c = complement(a);
    for (const auto &w : oracle::all_words(2, 6)) {
      const bool in_a = oracle::contains(a, w), in_b = oracle::contains(b, w);
      ASSERT_EQ(oracle::contains(u, w), in_a || in_b);
      ASSERT_EQ(oracle::contains(n, w), in_a && in_b);
      ASSERT_EQ(oracle::contains(c, w), !in_a);
    }
    ASSERT_EQ(is_subset(a, b), set_difference(a, b).is_empty());
    ASSERT_EQ(parse_clopen(a.str(), 2), a);
  }
}
