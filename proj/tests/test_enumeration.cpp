#include <algorithm>
#include <functional>

#include "doctest.h"
#include "polyrec/automata.hpp"
#include "polyrec/enumeration.hpp"
#include "polyrec/error.hpp"
#include "polyrec/oracle.hpp"
#include "test_util.hpp"

using namespace polyrec;
using namespace testutil;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

Dfa a_plus_b_star() {
  return make_dfa({"a", "b"}, 3, 0, {1, 2}, {{0, "a", 1}, {1, "a", 1}, {1, "b", 2}, {2, "b", 2}});
}

}  // namespace

TEST_CASE("density") {
  CHECK(density(astar_bstar(), 3) == 4);
  CHECK(density(a_plus_b_star(), 0) == 0);
  CHECK(density(intro_system(), 5) == 11);
  CHECK(count_words_up_to(star("a", {"a"}), 5) == 6);
  CHECK(count_words_up_to(astar_bstar(), 3) == 1 + 2 + 3 + 4);
  // Large lengths stay exact: (a|b)* has 2^100 words of length 100.
  CHECK(density(universal_language(OrderedAlphabet({"a", "b"})), 100) == ipow(2, 100));
}

TEST_CASE("rank and unrank on a*b*") {
  NumerationSystem s(astar_bstar());
  CHECK(rank(s, Word{}) == 0);
  CHECK(rank(s, w(s.language(), "ab")) == 4);
  CHECK(unrank(s, 0).empty());
  CHECK(str(s.language(), unrank(s, 5)) == "bb");
  CHECK(code_of([&] { rank(s, w(s.language(), "ba")); }) == ErrorCode::NotInLanguage);
}

TEST_CASE("intro system: rank of a^n is n^2") {
  NumerationSystem s(intro_system());
  CHECK(rank(s, w(s.language(), "aa")) == 4);
  Word x;
  for (unsigned n = 0; n <= 30; ++n) {
    CHECK(rank(s, x) == n * n);
    x.push_back(0);
  }
}

TEST_CASE("finite languages are rejected as numeration systems") {
  Dfa fin = finite_language(OrderedAlphabet({"a"}), {Word{0}});
  CHECK(code_of([&] { NumerationSystem s(fin); }) == ErrorCode::FiniteLanguage);
}

TEST_CASE("bijection and agreement with brute force on random systems") {
  std::mt19937 rng(77);
  for (int iter = 0; iter < 40; ++iter) {
    Dfa d = random_infinite_dfa(rng, 6, 3);
    CAPTURE(iter);
    NumerationSystem s(d);
    auto radix = brute_radix(s.language(), 6);
    CountTable table(s.language());
    for (std::size_t i = 0; i < radix.size(); ++i) {
      CHECK(rank(table, radix[i]) == i);
      CHECK(unrank(table, BigInt(i)) == radix[i]);
    }
    for (std::size_t n = 0; n <= 8; ++n) CHECK(density(s.language(), n) == brute_density(s.language(), n));
    for (unsigned n = 0; n < 2000; ++n) CHECK(rank(table, unrank(table, BigInt(n))) == n);
  }
}

TEST_CASE("rank is increasing within a length") {
  NumerationSystem s(intro_system());
  CountTable table(s.language());
  for (std::size_t n = 1; n <= 6; ++n) {
    auto words = brute_words(s.language(), n);
    for (std::size_t i = 1; i < words.size(); ++i) CHECK(rank(table, words[i - 1]) < rank(table, words[i]));
  }
}

TEST_CASE("min_words") {
  CHECK(equivalent(min_words(intro_system()), star("a", {"a", "b", "c"})).equal);
  CHECK(equivalent(min_words(star("a", {"a"})), star("a", {"a"})).equal);
  // Least word of length n in a⁺b* is a^n.
  Dfa m = min_words(a_plus_b_star());
  CHECK_FALSE(accepts(m, Word{}));
  CHECK(accepts(m, w(m, "aaa")));
  CHECK_FALSE(accepts(m, w(m, "aab")));

  std::mt19937 rng(5);
  for (int iter = 0; iter < 60; ++iter) {
    Dfa d = trim(random_dfa(rng, 6, 3));
    Dfa mw = min_words(d);
    CAPTURE(iter);
    for (std::size_t n = 0; n <= 6; ++n) {
      auto all = brute_words(d, n);
      auto got = brute_words(mw, n);
      if (all.empty()) {
        CHECK(got.empty());
      } else {
        REQUIRE(got.size() == 1);
        CHECK(got.front() == all.front());
      }
    }
  }
}

TEST_CASE("strip_first") {
  Dfa l1 = a_plus_b_star();
  Dfa st = strip_first(l1, 4);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(density(st, n) == (n >= 4 ? n - 4 : 0));
  CHECK(equivalent(strip_first(l1, 0), l1).equal);
  CHECK(is_empty(strip_first(star("a", {"a"}), 1)));

  std::mt19937 rng(11);
  for (int iter = 0; iter < 30; ++iter) {
    Dfa d = trim(random_dfa(rng, 5, 2));
    Dfa s2 = strip_first(d, 2);
    for (std::size_t n = 0; n <= 6; ++n) {
      auto all = brute_words(d, n);
      std::vector<Word> expected(all.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(2, all.size())),
                                 all.end());
      CHECK(brute_words(s2, n) == expected);
    }
  }
}

TEST_CASE("decimate") {
  NumerationSystem ab(astar_bstar());
  CHECK(equivalent(decimate(ab, 1, 0), ab.language()).equal);

  Dfa even = decimate(ab, 2, 0);
  auto kept = oracle::enumerate_radix(even, 6);
  std::vector<std::string> got;
  for (auto& x : kept) got.push_back(str(even, x));
  CHECK(got == std::vector<std::string>{"", "b", "ab", "aaa", "abb", "aaaa"});

  SUBCASE("agrees with brute force and partitions L") {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 15; ++iter) {
      NumerationSystem s(random_infinite_dfa(rng, 5, 2));
      auto radix = brute_radix(s.language(), 7);
      for (std::uint32_t m = 2; m <= 4; ++m) {
        Dfa all = empty_language(s.alphabet());
        for (std::uint32_t r = 0; r < m; ++r) {
          Dfa dr = decimate(s, m, r);
          for (std::size_t i = 0; i < radix.size(); ++i) CHECK(accepts(dr, radix[i]) == (i % m == r));
          CHECK(is_empty(product(all, dr, ProductMode::Intersection)));
          all = product(all, dr, ProductMode::Union);
        }
        CHECK(equivalent(all, s.language()).equal);
      }
    }
  }
  SUBCASE("state budget") {
    NumerationSystem s(intro_system());
    CHECK(code_of([&] { decimate(s, 5, 0, 2); }) == ErrorCode::ResourceLimit);
  }
}

TEST_CASE("min_words with a long length period") {
  // Branches a^p (p prime) cycles from a common root: the length profile has
  // period lcm(2, 3, 5, 7, 11, 13, 17) = 510510.
  const std::vector<std::size_t> primes{2, 3, 5, 7, 11, 13, 17};
  std::vector<std::string> letters;
  for (std::size_t i = 0; i < primes.size(); ++i) letters.push_back(std::string(1, static_cast<char>('b' + i)));
  letters.push_back("a");
  OrderedAlphabet sigma(letters);
  std::size_t total = 1;
  for (auto p : primes) total += p;
  Dfa d(sigma, total);
  d.set_final(0);
  StateId next = 1;
  const Symbol a = sigma.index_of("a");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    StateId first = next;
    d.set_transition(0, static_cast<Symbol>(i), first);
    for (std::size_t j = 0; j + 1 < primes[i]; ++j) d.set_transition(first + static_cast<StateId>(j), a, first + static_cast<StateId>(j) + 1);
    d.set_transition(first + static_cast<StateId>(primes[i]) - 1, a, first);
    d.set_final(first + static_cast<StateId>(primes[i]) - 1);
    next += static_cast<StateId>(primes[i]);
  }
  Dfa m = min_words(d);
  auto expected = oracle::oracle_min_words(d, 40, oracle::Budget{100000, 41});
  auto got = oracle::oracle_min_words(m, 40, oracle::Budget{100000, 41});
  CHECK(got == expected);
  for (auto& x : expected) CHECK(accepts(m, x));
}
