#include <algorithm>

#include "doctest.h"
#include "polyrec/automata.hpp"
#include "polyrec/constructors.hpp"
#include "polyrec/enumeration.hpp"
#include "polyrec/oracle.hpp"
#include "test_util.hpp"

using namespace polyrec;
using namespace testutil;

namespace {

// Every letter labels some transition of the trimmed automaton.
bool alphabet_is_minimal(const Dfa& d) {
  Dfa t = trim(d);
  std::vector<char> used(t.letter_count(), 0);
  for (StateId q = 0; q < static_cast<StateId>(t.state_count()); ++q)
    for (Symbol s = 0; s < t.letter_count(); ++s)
      if (t.next(q, s) != kNoState) used[s] = 1;
  return std::find(used.begin(), used.end(), 0) == used.end();
}

}  // namespace

TEST_CASE("build_power densities") {
  for (std::size_t k = 0; k <= 5; ++k) {
    LetterAllocator fresh;
    Dfa d = build_power(k, fresh);
    CountTable t(d);
    CAPTURE(k);
    for (unsigned n = 0; n <= 25; ++n) CHECK(t.density(n) == (k == 0 ? BigInt(1) : ipow(n, static_cast<unsigned>(k))));
    CHECK(BigInt(d.alphabet().size()) == min_alphabet_size(k));
    CHECK(alphabet_is_minimal(d));
  }
  LetterAllocator fresh;
  Dfa l2 = build_power(2, fresh);
  CHECK(oracle::oracle_density(l2, 3) == 9);
  LetterAllocator fresh3;
  Dfa l3 = build_power(3, fresh3);
  CHECK(oracle::oracle_density(l3, 2) == 8);
  CHECK(l3.alphabet().size() == 9);
}

TEST_CASE("build_power_base densities") {
  for (std::size_t k = 1; k <= 5; ++k) {
    LetterAllocator fresh;
    Dfa m = build_power_base(k, fresh);
    CountTable t(m);
    CAPTURE(k);
    CHECK(t.density(0) == 1);
    for (unsigned n = 1; n <= 25; ++n) CHECK(t.density(n) == ipow(n + 1, static_cast<unsigned>(k - 1)));
  }
  LetterAllocator f2;
  Dfa m2 = build_power_base(2, f2);
  CHECK(m2.alphabet().size() == 2);
  CHECK(same_up_to(m2, make_dfa(m2.alphabet().tokens(), 2, 0, {0, 1},
                                {{0, m2.alphabet().token(0), 0}, {0, m2.alphabet().token(1), 1},
                                 {1, m2.alphabet().token(1), 1}}),
                   6));
}

TEST_CASE("shuffle step counts n positions") {
  for (std::size_t k = 2; k <= 4; ++k) {
    LetterAllocator f1, f2;
    Dfa lk = build_power(k, f1);
    CountTable l(lk);
    Dfa mk = build_power_base(k, f2);
    CountTable m(mk);
    for (unsigned n = 1; n <= 20; ++n) CHECK(l.density(n) == BigInt(n) * m.density(n - 1));
  }
}

TEST_CASE("fresh letters are never reused") {
  LetterAllocator fresh;
  Dfa a = build_power(2, fresh);
  Dfa b = build_power(1, fresh);
  for (auto& tok : b.alphabet().tokens()) CHECK_FALSE(a.alphabet().contains(tok));
}

TEST_CASE("build_const") {
  LetterAllocator fresh;
  Dfa c5 = build_const(5, fresh);
  CHECK(oracle::oracle_density(c5, 0) == 0);
  CHECK(oracle::oracle_density(c5, 1) == 5);
  CHECK(oracle::oracle_density(c5, 7) == 5);
  Dfa c1 = build_const(1, fresh);
  CHECK(c1.alphabet().size() == 1);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(brute_density(c1, n) == (n == 0 ? 0u : 1u));

  // Four copies of L_1 and the constant 5: ρ(n) = 4n + 5.
  std::vector<Dfa> parts;
  for (int i = 0; i < 4; ++i) parts.push_back(build_power(1, fresh));
  parts.push_back(build_const(5, fresh));
  Dfa u = disjoint_union(parts);
  CountTable t(u);
  for (unsigned n = 1; n <= 20; ++n) CHECK(t.density(n) == 4 * n + 5);
}

TEST_CASE("build_stirling") {
  for (std::size_t k = 1; k <= 4; ++k) {
    LetterAllocator fresh;
    Dfa st = build_stirling(k, fresh);
    CountTable t(st);
    for (unsigned n = 0; n <= 25; ++n) CHECK(t.density(n) == ipow(n, static_cast<unsigned>(k)));
  }
  LetterAllocator fresh;
  CHECK(oracle::oracle_density(build_stirling(3, fresh), 4) == 64);
  CHECK(stirling2(3, 1) == 1);
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(3, 3) == 1);
  CHECK(stirling2(4, 2) == 7);
  CHECK(factorial(5) == 120);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("lemma_language") {
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t alpha = 1; alpha <= 5; ++alpha) {
      LetterAllocator fresh;
      Dfa lem = lemma_language(k, alpha, fresh);
      CountTable t(lem);
      CAPTURE(k);
      CAPTURE(alpha);
      for (unsigned n = 0; n <= 25; ++n) {
        BigInt expected = n < alpha ? BigInt(0)
                                    : ipow(n, static_cast<unsigned>(k)) -
                                          BigInt(alpha) * ipow(n, static_cast<unsigned>(k - 1));
        CHECK(t.density(n) == expected);
      }
    }
  LetterAllocator fresh;
  Dfa l23 = lemma_language(2, 3, fresh);
  CHECK(oracle::oracle_density(l23, 2) == 0);
  CHECK(oracle::oracle_density(l23, 3) == 0);
  CHECK(oracle::oracle_density(l23, 4) == 4);
  Dfa l32 = lemma_language(3, 2, fresh);
  for (std::size_t n = 0; n <= 5; ++n)
    CHECK(oracle::oracle_density(l32, n) == (n < 2 ? BigInt(0) : ipow(n, 3) - 2 * ipow(n, 2)));
  Dfa l324 = lemma_language(3, 24, fresh);
  CountTable big(l324);
  CHECK(big.density(24) == 0);
  CHECK(big.density(25) == 625);
}

TEST_CASE("min_alphabet_size") {
  const long long expected[] = {1, 2, 3, 9, 26, 90};
  for (std::size_t k = 0; k <= 5; ++k) CHECK(min_alphabet_size(k) == expected[k]);
  for (std::size_t m = 11; m <= 15; ++m) CHECK(min_alphabet_size(m) < 3 * factorial(m - 1));
}
