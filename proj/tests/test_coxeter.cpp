#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rwgraph/coxeter.hpp"
#include "rwgraph/errors.hpp"

using namespace rwg;

namespace {

const GroupSpec A4{Family::A, 4};
const GroupSpec A6{Family::A, 6};
const GroupSpec B2{Family::B, 2};
const GroupSpec B3{Family::B, 3};

std::vector<std::string> names(const std::vector<Hyperplane>& hs) {
  std::vector<std::string> out;
  for (const auto& h : hs) out.push_back(h.name());
  return out;
}

oracle::Perm images(const Element& e) { return {e.images().begin(), e.images().end()}; }

}  // namespace

TEST(GroupSpec, Validation) {
  EXPECT_THROW(GroupSpec(Family::A, 1), InvalidInput);
  EXPECT_THROW(GroupSpec(Family::B, 0), InvalidInput);
  EXPECT_NO_THROW(GroupSpec(Family::B, 1));
  EXPECT_EQ(A4.min_generator(), 1);
  EXPECT_EQ(A4.max_generator(), 3);
  EXPECT_EQ(B3.min_generator(), 0);
  EXPECT_EQ(B3.max_generator(), 2);
  EXPECT_EQ(A4.hyperplane_count(), 6);
  EXPECT_EQ(B3.hyperplane_count(), 9);
  EXPECT_EQ(A4.name(), "A4");
  EXPECT_EQ(B3.braid_order(0, 1), 4);
  EXPECT_EQ(B3.braid_order(1, 2), 3);
  EXPECT_EQ(B3.braid_order(0, 2), 2);
  EXPECT_EQ(parse_family("B"), Family::B);
  EXPECT_THROW(parse_family("C"), InvalidInput);
}

TEST(Element, ParseAndPrint) {
  EXPECT_EQ(Element::parse(A4, "w0").to_string(), "4321");
  EXPECT_EQ(Element::parse(B3, "w0").to_string(), "-1,-2,-3");
  EXPECT_EQ(Element::parse(B3, "-3,-2,-1").to_string(), "-3,-2,-1");
  EXPECT_EQ(Element::parse(A4, "3,4,1,2"), Element::parse(A4, "3412"));
  EXPECT_THROW(Element::parse(A4, "3312"), InvalidInput);
  EXPECT_THROW(Element::parse(A4, "-1,2,3,4"), InvalidInput);
  EXPECT_THROW(Element::parse(A4, "123"), InvalidInput);
  EXPECT_THROW(Element::parse(B3, "1,2,4"), InvalidInput);
  GroupSpec a11{Family::A, 11};
  EXPECT_EQ(Element::identity(a11).to_string(), "1,2,3,4,5,6,7,8,9,10,11");
}

TEST(Element, GroupLaws) {
  for (auto spec : {GroupSpec(Family::A, 4), GroupSpec(Family::B, 3)}) {
    auto all = all_elements(spec);
    for (const auto& u : all) {
      EXPECT_EQ(u * u.inverse(), Element::identity(spec));
      EXPECT_EQ(u * Element::identity(spec), u);
    }
  }
}

TEST(Word, ParseAndValidate) {
  EXPECT_EQ(Word::parse(A4, "121321").to_string(), "121321");
  EXPECT_EQ(Word::parse(A4, "1,2,1"), Word(A4, {1, 2, 1}));
  EXPECT_THROW(Word(A4, {0, 1}), InvalidInput);
  EXPECT_THROW(Word(A4, {4}), InvalidInput);
  EXPECT_THROW(Word::parse(B2, "012"), InvalidInput);
  GroupSpec a12{Family::A, 12};
  EXPECT_EQ(Word(a12, {10, 11, 1}).to_string(), "10,11,1");
  EXPECT_EQ(Word::parse(a12, "10,11,1"), Word(a12, {10, 11, 1}));
  EXPECT_LT(Word::parse(A4, "121321"), Word::parse(A4, "123121"));
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(Word(A4, {1, 2, 1, 3, 2, 1})).to_string(), "4321");
  EXPECT_EQ(evaluate(Word(A6, {2, 1, 3, 5, 4, 3})).to_string(), "316425");
  EXPECT_EQ(evaluate(Word(B2, {0, 1, 0, 1})), Element(B2, {-1, -2}));
  EXPECT_EQ(evaluate(Word(A4)), Element::identity(A4));
}

TEST(Evaluate, MonoidMorphism) {
  std::mt19937_64 rng(0);
  for (auto spec : {GroupSpec(Family::A, 6), GroupSpec(Family::B, 5)}) {
    std::uniform_int_distribution<int> letter(spec.min_generator(), spec.max_generator());
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> u(static_cast<std::size_t>(trial % 9)), v(static_cast<std::size_t>(trial % 7));
      for (auto& x : u) x = letter(rng);
      for (auto& x : v) x = letter(rng);
      Word wu(spec, u), wv(spec, v);
      EXPECT_EQ(evaluate(wu.concat(wv)), evaluate(wu) * evaluate(wv));
    }
  }
}

TEST(Length, Examples) {
  EXPECT_EQ(length(Element::parse(A4, "1234")), 0);
  EXPECT_EQ(length(Element::parse(A4, "4321")), 6);
  EXPECT_EQ(length(Element::parse(B3, "-3,-2,-1")), 6);
  EXPECT_EQ(length(Element::longest(B3)), 9);
}

TEST(Length, MatchesOracleAndLongest) {
  for (int n = 2; n <= 5; ++n) {
    GroupSpec spec(Family::A, n);
    for (const auto& w : all_elements(spec)) ASSERT_EQ(length(w), oracle::length(images(w))) << w.to_string();
    EXPECT_EQ(length(Element::longest(spec)), n * (n - 1) / 2);
  }
  for (int n = 1; n <= 4; ++n) {
    GroupSpec spec(Family::B, n);
    for (const auto& w : all_elements(spec)) ASSERT_EQ(length(w), oracle::length(images(w))) << w.to_string();
    EXPECT_EQ(length(Element::longest(spec)), n * n);
  }
}

TEST(AllElements, CountsAndOrder) {
  EXPECT_EQ(all_elements(GroupSpec(Family::A, 5)).size(), 120u);
  EXPECT_EQ(all_elements(GroupSpec(Family::B, 3)).size(), 48u);
  auto e = all_elements(B3);
  EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
  EXPECT_EQ(std::set<Element>(e.begin(), e.end()).size(), e.size());
}

TEST(IsReduced, Examples) {
  EXPECT_TRUE(is_reduced(Word(A4, {1, 2, 1, 3, 2, 1})));
  EXPECT_FALSE(is_reduced(Word(A4, {1, 1})));
  EXPECT_TRUE(is_reduced(Word(B3, {0, 1, 2, 0, 1, 0})));
  EXPECT_FALSE(is_reduced(Word(B2, {0, 1, 0, 1, 0})));
}

TEST(IsReduced, MatchesOracleOnAllShortWords) {
  for (auto spec : {GroupSpec(Family::A, 4), GroupSpec(Family::B, 3)}) {
    int k = spec.generator_count();
    for (int len = 0; len <= 5; ++len) {
      int total = 1;
      for (int i = 0; i < len; ++i) total *= k;
      for (int code = 0; code < total; ++code) {
        std::vector<int> letters;
        std::string digits;
        for (int i = 0, c = code; i < len; ++i, c /= k) {
          letters.push_back(spec.min_generator() + c % k);
          digits += static_cast<char>('0' + letters.back());
        }
        ASSERT_EQ(is_reduced(Word(spec, letters)), oracle::reduced(spec.n(), digits)) << digits;
      }
    }
  }
}

TEST(InversionSet, Examples) {
  EXPECT_EQ(names(inversion_set(Element::parse(A6, "316425"))),
            (std::vector<std::string>{"H13", "H23", "H24", "H26", "H46", "H56"}));
  EXPECT_TRUE(inversion_set(Element::identity(A4)).empty());
  auto b = inversion_set(Element::parse(B3, "-3,-2,-1"));
  std::set<std::string> got;
  for (const auto& h : b) got.insert(h.name());
  EXPECT_EQ(got, (std::set<std::string>{"x1=0", "x2=0", "x3=0", "x1=-x2", "x1=-x3", "x2=-x3"}));
}

TEST(InversionSet, LongestIsEverything) {
  for (auto spec : {GroupSpec(Family::A, 5), GroupSpec(Family::B, 4)}) {
    EXPECT_EQ(static_cast<int>(inversion_set(Element::longest(spec)).size()), spec.hyperplane_count());
  }
}

TEST(CrossingSequence, Examples) {
  EXPECT_EQ(names(crossing_sequence(Word(A4, {1, 2, 1, 3, 2, 1})).crossings),
            (std::vector<std::string>{"H12", "H13", "H23", "H14", "H24", "H34"}));
  EXPECT_EQ(names(crossing_sequence(Word(A6, {2, 1, 3, 5, 4, 3})).crossings),
            (std::vector<std::string>{"H23", "H13", "H24", "H56", "H26", "H46"}));
  EXPECT_EQ(names(crossing_sequence(Word(B2, {0, 1, 0, 1})).crossings),
            (std::vector<std::string>{"x1=0", "x1=-x2", "x2=0", "x1=x2"}));
  EXPECT_THROW(crossing_sequence(Word(A4, {1, 1})), DomainError);
}

TEST(CrossingSequence, AgreesWithRootOracle) {
  std::mt19937_64 rng(1);
  for (auto spec : {GroupSpec(Family::A, 6), GroupSpec(Family::B, 5)}) {
    for (const auto& w : {Element::longest(spec), Element::longest(spec).times_generator(spec.max_generator())}) {
      auto digits = oracle::some_reduced_word(images(w));
      auto seq = crossing_sequence(Word::parse(spec, digits));
      auto expected = oracle::crossings(spec.n(), digits);
      ASSERT_EQ(seq.crossings.size(), expected.size());
      for (std::size_t k = 0; k < expected.size(); ++k) {
        EXPECT_EQ(oracle::normalise(seq.crossings[k].normal(spec.n())), expected[k]) << digits << " at " << k;
      }
    }
  }
}

TEST(CrossingSequence, SetEqualsInversionSet) {
  for (auto spec : {GroupSpec(Family::A, 5), GroupSpec(Family::B, 3)}) {
    for (const auto& w : all_elements(spec)) {
      auto digits = oracle::some_reduced_word(images(w));
      auto closure = oracle::rewrite_closure(digits, spec.family() == Family::B);
      auto inv = inversion_set(w);
      for (const auto& r : closure.words) {
        auto c = crossing_sequence(Word::parse(spec, r)).crossings;
        std::sort(c.begin(), c.end());
        ASSERT_EQ(c, inv) << r;
      }
    }
  }
}

TEST(BraidMoves, PreserveReducedness) {
  for (auto spec : {GroupSpec(Family::A, 5), GroupSpec(Family::B, 3)}) {
    auto w0 = Element::longest(spec);
    auto closure = oracle::rewrite_closure(oracle::some_reduced_word(images(w0)), spec.family() == Family::B);
    for (const auto& r : closure.words) {
      auto moves = braid_moves(Word::parse(spec, r));
      auto expected = oracle::rewrites(r, spec.family() == Family::B);
      std::set<std::string> got;
      for (const auto& m : moves) {
        EXPECT_TRUE(is_reduced(m.result));
        EXPECT_EQ(evaluate(m.result), w0);
        got.insert(m.result.to_string());
      }
      EXPECT_EQ(got, std::set<std::string>(expected.begin(), expected.end())) << r;
    }
  }
}

TEST(RightDescents, MatchLengthDrop) {
  for (auto spec : {GroupSpec(Family::A, 5), GroupSpec(Family::B, 3)}) {
    for (const auto& w : all_elements(spec)) {
      std::vector<int> expected;
      for (int g = spec.min_generator(); g <= spec.max_generator(); ++g)
        if (length(w.times_generator(g)) < length(w)) expected.push_back(g);
      EXPECT_EQ(right_descents(w), expected) << w.to_string();
    }
  }
}

TEST(Hyperplane, NamesAndValidation) {
  EXPECT_EQ(Hyperplane::pair(A4, 3, 1).name(), "H13");
  EXPECT_EQ(Hyperplane::pair(GroupSpec(Family::A, 12), 10, 11).name(), "H{10,11}");
  EXPECT_EQ(Hyperplane::coordinate(B3, 2).name(), "x2=0");
  EXPECT_EQ(Hyperplane::minus(B3, 1, 3).name(), "x1=-x3");
  EXPECT_EQ(Hyperplane::plus(B3, 2, 3).name(), "x2=x3");
  EXPECT_THROW(Hyperplane::pair(A4, 2, 2), InvalidInput);
  EXPECT_THROW(Hyperplane::pair(A4, 1, 5), InvalidInput);
  EXPECT_THROW(Hyperplane::coordinate(A4, 1), InvalidInput);
}
