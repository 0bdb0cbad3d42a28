#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyrec/enumeration.hpp"
#include "polyrec/polynomial.hpp"

namespace polyrec {

// Q = Σ_j (x^{degree_j + 1} − a_j x^{degree_j}) + Σ_l b_l x^l.
struct Decomposition {
  struct Borrow {
    std::size_t degree;
    BigInt coefficient;  // a_j > 0
  };
  std::vector<Borrow> borrows;
  std::vector<BigInt> plain;  // b_l ≥ 0, ascending degree
  std::size_t alpha = 2;

  RationalPolynomial reconstruct() const;
};

// Low-to-high borrowing over an integer polynomial with positive leading
// coefficient. Throws InfeasibleDecomposition when the leading coefficient
// is exhausted.
Decomposition decompose(const std::vector<BigInt>& ascending);

// Disjoint union of the lemma languages, the plain power copies and a
// constant block. Density Q(n) for n ≥ alpha, 0 at n = 0.
Dfa assemble(const Decomposition& dec, LetterAllocator& fresh);

// Makes the number of words of length < alpha equal to `target` without
// touching longer lengths. Surplus words go radix-greatest first; missing
// words are fresh-letter words of length alpha − 1. Throws CannotAdjust
// when words must be added and alpha < 2.
Dfa adjust_prefix(const Dfa& d, std::size_t alpha, const BigInt& target, LetterAllocator& fresh);

struct ExceptionalWord {
  BigInt value;
  Word word;
};

struct SystemBundle {
  RationalPolynomial polynomial;
  NumerationSystem system;
  Dfa recognizer;
  std::size_t alpha = 0;
  BigInt scale = 1;
  std::vector<ExceptionalWord> exceptional;
  // Language before keeping every scale-th word; equals the system language
  // when scale == 1.
  Dfa undecimated;
};

struct BuildOptions {
  std::size_t state_budget = kDefaultStateBudget;
};

SystemBundle build_system(const RationalPolynomial& p, const BuildOptions& options = {});

// Recognizer for P(N) over `language` with its own alphabet order:
// (I(L) ∩ Σ^{≥alpha}) ∪ {rep(P(0)), …, rep(P(alpha−1))}.
Dfa build_recognizer(const NumerationSystem& system, const RationalPolynomial& p, std::size_t alpha,
                     std::vector<ExceptionalWord>* exceptional = nullptr);

// Rebuilds the recognizer under the alphabet order `order` (a permutation
// of the system's tokens) and checks it against oracle enumeration of the
// first `word_bound` words. Decimation, when present, is redone under the
// new order.
bool reorder_check(const SystemBundle& bundle, const std::vector<std::string>& order,
                   std::size_t word_bound = 10000, const BuildOptions& options = {});

}  // namespace polyrec
