#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyrec/automaton.hpp"

namespace polyrec {

// ---- basic languages ------------------------------------------------------

Dfa empty_language(const OrderedAlphabet& alphabet);
Dfa universal_language(const OrderedAlphabet& alphabet);
// Trie automaton accepting exactly `words`.
Dfa finite_language(const OrderedAlphabet& alphabet, const std::vector<Word>& words);

// ---- structural helpers ---------------------------------------------------

// Keeps states that are reachable and co-reachable, numbered in BFS order
// from the initial state (letters in alphabet order). An empty language
// comes back as a single non-final state.
Dfa trim(const Dfa& d);
Nfa to_nfa(const Dfa& d);
bool is_empty(const Dfa& d);
// True when some cycle lies on a path from the initial state to a final one.
bool is_infinite(const Dfa& d);

// Same automaton over `alphabet`, which must hold the same tokens in some
// (possibly different) order.
Dfa with_alphabet(const Dfa& d, const OrderedAlphabet& alphabet);

// ---- operations -----------------------------------------------------------

Dfa determinize(const Nfa& n);
Dfa minimize(const Dfa& d);

enum class ProductMode { Union, Intersection, Difference };
// Throws AlphabetMismatch unless both alphabets are identical (same tokens,
// same order).
Dfa product(const Dfa& a, const Dfa& b, ProductMode mode);
Dfa complement(const Dfa& d);

Nfa reverse(const Dfa& d);
// Two-track interleaving; alphabet is a's letters followed by b's new ones.
Nfa shuffle(const Dfa& a, const Dfa& b);

Dfa embed(const Dfa& a, const OrderedAlphabet& target,
          const std::map<std::string, std::string>& rename);
Dfa disjoint_union(std::span<const Dfa> parts);

bool accepts(const Dfa& d, const Word& w);
bool accepts(const Dfa& d, const TokenWord& w);

struct Equivalence {
  bool equal = true;
  // Shortest word in the symmetric difference, radix-least among those,
  // spelled with tokens.
  std::optional<TokenWord> counterexample;
};
Equivalence equivalent(const Dfa& a, const Dfa& b);

// (L \ remove) ∪ add. Tokens unknown to d's alphabet in `add` are appended
// to the alphabet in first-seen order.
Dfa modify_finite(const Dfa& d, const std::vector<TokenWord>& add,
                  const std::vector<TokenWord>& remove);

// Σ* σ Σ^offset: σ followed by exactly `offset` letters. The minimal DFA
// has 2^(offset+1) states, so keep offsets small.
Dfa position_pattern(const OrderedAlphabet& alphabet, Symbol sigma, std::size_t offset);
// Union of position_pattern(σ, i) for i < window: the last σ is followed by
// fewer than `window` letters. window + 1 states.
Dfa letter_in_suffix(const OrderedAlphabet& alphabet, Symbol sigma, std::size_t window);

// L ∩ Σ^{≥ min_length}.
Dfa restrict_min_length(const Dfa& d, std::size_t min_length);

}  // namespace polyrec
