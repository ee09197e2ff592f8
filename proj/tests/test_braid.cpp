#include <doctest.h>

#include <random>

#include "angulate/braid.hpp"
#include "angulate/budget.hpp"
#include "angulate/error.hpp"
#include "oracles.hpp"

using namespace angulate;

namespace {

BraidWord w(int strands, const std::string& text) { return parse_braid(strands, text); }

BraidWord random_word(std::mt19937_64& rng, int strands, int length) {
  BraidWord out{strands, {}};
  for (int i = 0; i < length; ++i)
    out.letters.push_back({1 + static_cast<int>(rng() % (strands - 1)), rng() % 2 ? 1 : -1});
  return out;
}

// Applies one defining relation (or inserts/deletes a cancelling pair) at a
// random position, keeping the braid unchanged.
BraidWord rewrite(std::mt19937_64& rng, BraidWord x) {
  auto& l = x.letters;
  const int n = x.strands;
  for (int attempt = 0; attempt < 20; ++attempt) {
    const std::size_t p = l.empty() ? 0 : rng() % (l.size() + 1);
    switch (rng() % 4) {
      case 0: {  // insert s s^-1
        const int g = 1 + static_cast<int>(rng() % (n - 1));
        const int e = rng() % 2 ? 1 : -1;
        l.insert(l.begin() + static_cast<std::ptrdiff_t>(p), {{g, e}, {g, -e}});
        return x;
      }
      case 1:  // delete a cancelling pair
        if (p + 1 < l.size() && l[p].gen == l[p + 1].gen && l[p].exp == -l[p + 1].exp) {
          l.erase(l.begin() + static_cast<std::ptrdiff_t>(p), l.begin() + static_cast<std::ptrdiff_t>(p) + 2);
          return x;
        }
        break;
      case 2:  // far commutation, any signs
        if (p + 1 < l.size() && std::abs(l[p].gen - l[p + 1].gen) >= 2) {
          std::swap(l[p], l[p + 1]);
          return x;
        }
        break;
      case 3:  // braid relation on equal-sign triples
        if (p + 2 < l.size() && l[p].gen == l[p + 2].gen && std::abs(l[p].gen - l[p + 1].gen) == 1 &&
            l[p].exp == l[p + 1].exp && l[p].exp == l[p + 2].exp) {
          const int a = l[p].gen;
          l[p].gen = l[p + 2].gen = l[p + 1].gen;
          l[p + 1].gen = a;
          return x;
        }
        break;
    }
  }
  return x;
}

}  // namespace

TEST_CASE("parsing and printing") {
  const auto x = w(4, "s1 s3^-1  s2");
  CHECK(x.letters == std::vector<BraidLetter>{{1, 1}, {3, -1}, {2, 1}});
  CHECK(to_string(x) == "s1 s3^-1 s2");
  CHECK(to_string(BraidWord{3, {}}) == "e");
  CHECK_THROWS_AS(w(3, "s3"), ParseError);
  CHECK_THROWS_AS(w(3, "t1"), ParseError);
  CHECK_THROWS_AS(w(3, "s1^2"), ParseError);
  CHECK_THROWS_AS(w(3, "s"), ParseError);
}

TEST_CASE("defining relations") {
  CHECK(equal(w(3, "s1 s2 s1"), w(3, "s2 s1 s2")));
  CHECK(equal(w(4, "s1 s3"), w(4, "s3 s1")));
  CHECK(equal(w(3, "s1 s2 s1 s1 s2 s1 s1"), w(3, "s1 s1 s2 s1 s1 s2 s1")));
  CHECK(equal(w(5, "s1 s2 s3"), w(5, "s1 s2 s3")));
  CHECK_FALSE(equal(w(3, "s1"), w(3, "s2")));
  CHECK_FALSE(equal(w(3, "s1 s2"), w(3, "s2 s1")));
  CHECK_FALSE(equal(w(3, "s1 s1"), w(3, "")));
}

TEST_CASE("normal form basics") {
  CHECK(normal_form(w(4, "s2 s2^-1")) == normal_form(BraidWord{4, {}}));
  const auto full = normal_form(w(3, "s1 s2 s1"));
  CHECK(full.power == 1);
  CHECK(full.factors.empty());
  CHECK(normal_form(w(3, "s1^-1")).power == -1);
  CHECK(equal(to_braid_word(normal_form(w(4, "s1 s3^-1 s2 s2 s1^-1"))), w(4, "s1 s3^-1 s2 s2 s1^-1")));
}

TEST_CASE("permutation image") {
  CHECK(permutation_image(w(3, "s1")) == std::vector<int>{2, 1, 3});
  const auto cycle = permutation_image(w(3, "s1 s2"));
  CHECK(cycle != std::vector<int>{1, 2, 3});
  CHECK(permutation_image(w(3, "s1 s2 s1")) == std::vector<int>{3, 2, 1});
}

TEST_CASE("budget") {
  BraidWord big{3, std::vector<BraidLetter>(budgets().oracle_letters + 1, {1, 1})};
  CHECK_THROWS_AS(normal_form(big), BudgetExceeded);
  CHECK(parse_budgets("500").oracle_letters == 500);
  CHECK(parse_budgets("500").coset_table == 500);
  const auto split = parse_budgets("oracle=7,coset=9");
  CHECK(split.oracle_letters == 7);
  CHECK(split.coset_table == 9);
  CHECK_THROWS_AS(parse_budgets("lots"), InvalidArgument);
  CHECK_THROWS_AS(parse_budgets("speed=3"), InvalidArgument);
}

TEST_CASE("agreement with the free group action on all short words") {
  // Every word of length <= 6 in B3 and <= 4 in B4 against every other of the
  // same strand count: equal normal forms iff equal Artin actions.
  for (auto [strands, max_len] : std::vector<std::pair<int, int>>{{3, 6}, {4, 4}}) {
    std::vector<BraidWord> words{{strands, {}}};
    for (std::size_t start = 0; start < words.size(); ++start) {
      if (static_cast<int>(words[start].letters.size()) == max_len) continue;
      for (int g = 1; g < strands; ++g)
        for (int e : {1, -1}) {
          BraidWord next = words[start];
          next.letters.push_back({g, e});
          words.push_back(std::move(next));
        }
    }
    std::map<std::vector<oracle::FreeWord>, BraidNormalForm> by_action;
    std::map<std::pair<int, std::vector<Permutation>>, std::vector<oracle::FreeWord>> by_form;
    for (const auto& x : words) {
      const auto action = oracle::artin_action(x);
      const auto form = normal_form(x);
      auto [it, fresh] = by_action.emplace(action, form);
      REQUIRE(it->second == form);
      auto [jt, fresh2] = by_form.emplace(std::pair{form.power, form.factors}, action);
      REQUIRE(jt->second == action);
    }
  }
}

TEST_CASE("agreement with the free group action on sampled pairs up to length 8") {
  std::mt19937_64 rng(99);
  int equal_pairs = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int strands = 3 + static_cast<int>(rng() % 2);
    const auto a = random_word(rng, strands, static_cast<int>(rng() % 9));
    BraidWord b = a;
    if (rng() % 2) {
      for (int k = 0; k < 6; ++k) b = rewrite(rng, b);
    } else {
      b = random_word(rng, strands, static_cast<int>(rng() % 9));
    }
    const bool same = equal(a, b);
    REQUIRE(same == oracle::artin_equal(a, b));
    equal_pairs += same;
  }
  CHECK(equal_pairs > 1000);
}

TEST_CASE("positive words agree with monoid rewriting") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int strands = 3 + static_cast<int>(rng() % 2);
    const int length = 1 + static_cast<int>(rng() % 8);
    std::vector<int> gens;
    for (int i = 0; i < length; ++i) gens.push_back(1 + static_cast<int>(rng() % (strands - 1)));
    const auto cls = oracle::positive_class(gens);
    BraidWord a{strands, {}};
    for (int g : gens) a.letters.push_back({g, 1});
    for (const auto& other : cls) {
      BraidWord b{strands, {}};
      for (int g : other) b.letters.push_back({g, 1});
      REQUIRE(equal(a, b));
    }
    // A random positive word of the same length is equal iff it is in the class.
    std::vector<int> probe;
    for (int i = 0; i < length; ++i) probe.push_back(1 + static_cast<int>(rng() % (strands - 1)));
    BraidWord b{strands, {}};
    for (int g : probe) b.letters.push_back({g, 1});
    REQUIRE(equal(a, b) == (cls.count(probe) == 1));
  }
}

TEST_CASE("equality is invariant under random relation rewriting") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 2000; ++trial) {
    const int strands = 2 + static_cast<int>(rng() % 5);
    const auto a = random_word(rng, strands, static_cast<int>(rng() % 40));
    BraidWord b = a;
    for (int k = 0; k < 10; ++k) b = rewrite(rng, b);
    REQUIRE(equal(a, b));
    REQUIRE(permutation_image(a) == permutation_image(b));
    REQUIRE(normal_form(a * a.inverse()) == normal_form(BraidWord{strands, {}}));
  }
}
