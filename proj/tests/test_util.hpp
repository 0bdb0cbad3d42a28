#pragma once

// Small helpers shared by the test binaries: literal automata and a
// membership-only brute force that shares no code with the counting or
// oracle modules.

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "polyrec/automata.hpp"
#include "polyrec/bigint.hpp"

namespace testutil {

using polyrec::Dfa;
using polyrec::OrderedAlphabet;
using polyrec::StateId;
using polyrec::Word;

struct Edge {
  StateId from;
  std::string letter;
  StateId to;
};

inline Dfa make_dfa(std::vector<std::string> letters, std::size_t states, StateId initial,
                    std::initializer_list<StateId> finals, std::initializer_list<Edge> edges) {
  OrderedAlphabet sigma(std::move(letters));
  Dfa d(sigma, states, initial);
  for (StateId f : finals) d.set_final(f);
  for (const Edge& e : edges) d.set_transition(e.from, sigma.index_of(e.letter), e.to);
  return d;
}

// a*b* over {a, b} (or a larger alphabet given in `letters`).
inline Dfa astar_bstar(std::vector<std::string> letters = {"a", "b"}) {
  return make_dfa(std::move(letters), 2, 0, {0, 1}, {{0, "a", 0}, {0, "b", 1}, {1, "b", 1}});
}

inline Dfa star(const std::string& a, std::vector<std::string> letters) {
  return make_dfa(std::move(letters), 1, 0, {0}, {{0, a, 0}});
}

// a*b* ∪ a*c* over a < b < c.
inline Dfa intro_system() {
  return make_dfa({"a", "b", "c"}, 3, 0, {0, 1, 2},
                  {{0, "a", 0}, {0, "b", 1}, {1, "b", 1}, {0, "c", 2}, {2, "c", 2}});
}

// Words from a compact string when every token is one character.
inline Word w(const Dfa& d, const std::string& s) {
  Word out;
  for (char c : s) out.push_back(d.alphabet().index_of(std::string(1, c)));
  return out;
}

inline std::string str(const Dfa& d, const Word& word) {
  std::string out;
  for (auto s : word) out += d.alphabet().token(s);
  return out;
}

// Every word over the alphabet of length exactly n, in lexicographic order.
inline std::vector<Word> all_words(std::size_t letters, std::size_t n) {
  std::vector<Word> out;
  Word cur(n, 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] + 1 == letters) cur[--i] = 0;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

// Brute-force accepted words of length n, lexicographic.
inline std::vector<Word> brute_words(const Dfa& d, std::size_t n) {
  std::vector<Word> out;
  if (d.letter_count() == 0) {
    if (n == 0 && polyrec::accepts(d, Word{})) out.push_back({});
    return out;
  }
  for (auto& x : all_words(d.letter_count(), n))
    if (polyrec::accepts(d, x)) out.push_back(x);
  return out;
}

inline std::size_t brute_density(const Dfa& d, std::size_t n) { return brute_words(d, n).size(); }

// First words in radix order up to length max_len.
inline std::vector<Word> brute_radix(const Dfa& d, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= max_len; ++n)
    for (auto& x : brute_words(d, n)) out.push_back(x);
  return out;
}

// Language equality on all words of length ≤ max_len (by brute force).
inline bool same_up_to(const Dfa& a, const Dfa& b, std::size_t max_len) {
  for (std::size_t n = 0; n <= max_len; ++n)
    if (brute_words(a, n) != brute_words(b, n)) return false;
  return true;
}

inline polyrec::BigInt ipow(long long base, unsigned e) {
  polyrec::BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace testutil

#include <random>

namespace testutil {

// Random partial DFA with up to `max_states` states over `letters` letters
// ("a", "b", ...). Transitions are present with probability ~2/3.
inline Dfa random_dfa(std::mt19937& rng, std::size_t max_states, std::size_t letters) {
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < letters; ++i) tokens.push_back(std::string(1, static_cast<char>('a' + i)));
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_states)(rng);
  Dfa d(OrderedAlphabet(tokens), n);
  std::uniform_int_distribution<int> state(0, static_cast<int>(n) - 1), coin(0, 2);
  for (std::size_t q = 0; q < n; ++q) {
    d.set_final(static_cast<StateId>(q), coin(rng) == 0);
    for (polyrec::Symbol s = 0; s < letters; ++s)
      if (coin(rng) != 0) d.set_transition(static_cast<StateId>(q), s, state(rng));
  }
  return d;
}

// Random DFA whose trimmed language is infinite.
inline Dfa random_infinite_dfa(std::mt19937& rng, std::size_t max_states, std::size_t letters) {
  for (;;) {
    Dfa d = polyrec::trim(random_dfa(rng, max_states, letters));
    if (polyrec::is_infinite(d)) return d;
  }
}

}  // namespace testutil
