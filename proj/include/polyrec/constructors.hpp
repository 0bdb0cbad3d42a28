#pragma once

#include <cstddef>

#include "polyrec/alphabet.hpp"
#include "polyrec/automaton.hpp"
#include "polyrec/bigint.hpp"

namespace polyrec {

// Stock languages of prescribed density. Every builder takes its letters
// from `fresh`, so languages built in one session never share letters.

// ρ(n) = n^k for n ≥ 1, ρ(0) = [k = 0].
// L_0 = a*, L_1 = a⁺b*, L_k = M_k ⧢ {σ} for k ≥ 2.
Dfa build_power(std::size_t k, LetterAllocator& fresh);

// ρ(n) = (n+1)^(k-1) for n ≥ 1, ρ(0) = 1. M_1 = a*, M_2 = a*b*, and for
// k ≥ 3 the disjoint union of binom(k-1, j) copies of L_j, highest degree
// first.
Dfa build_power_base(std::size_t k, LetterAllocator& fresh);

// ρ(n) = c for n ≥ 1, ρ(0) = 0: {σ_1..σ_c} σ_1*.
Dfa build_const(std::size_t c, LetterAllocator& fresh);

// ρ(n) = n^k for n ≥ 0, via n^k = Σ_t t! S(k,t) binom(n,t): copies of
// "exactly t b's" over private two-letter alphabets.
Dfa build_stirling(std::size_t k, LetterAllocator& fresh);

// ρ(n) = n^k − α n^(k−1) for n ≥ α and 0 below.
Dfa lemma_language(std::size_t k, std::size_t alpha, LetterAllocator& fresh);

// Alphabet size of build_power(k): u_0 = 1, u_1 = 2, u_2 = 3,
// u_m = Σ_{j<m} u_j binom(m-1, j) + 1.
BigInt min_alphabet_size(std::size_t k);

BigInt binomial(std::size_t n, std::size_t k);
BigInt stirling2(std::size_t n, std::size_t k);
BigInt factorial(std::size_t n);

}  // namespace polyrec
