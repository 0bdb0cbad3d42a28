#pragma once

#include <cstddef>
#include <vector>

#include "polyrec/automata.hpp"
#include "polyrec/bigint.hpp"

namespace polyrec {

// Lazily extended counting table of a Dfa:
//   u_q(m) = number of words of length m accepted from q,
//   v(n)   = number of accepted words of length < n.
// The table keeps a pointer to the Dfa, which must outlive it. One table
// belongs to one computation; it is not safe to share across threads.
class CountTable {
 public:
  explicit CountTable(const Dfa& d);
  explicit CountTable(Dfa&&) = delete;

  const BigInt& u(StateId q, std::size_t length);
  const BigInt& density(std::size_t length) { return u(dfa_->initial(), length); }
  const BigInt& cumulative(std::size_t length);
  const Dfa& dfa() const noexcept { return *dfa_; }

 private:
  void extend_to(std::size_t length);

  const Dfa* dfa_;
  std::vector<std::vector<BigInt>> u_;  // u_[m][q]
  std::vector<BigInt> v_;
};

// Abstract numeration system: an infinite regular language with the radix
// (length first, then lexicographic) order induced by its alphabet order.
class NumerationSystem {
 public:
  // Throws FiniteLanguage when L(d) is finite.
  explicit NumerationSystem(Dfa d);

  const Dfa& language() const noexcept { return dfa_; }
  const OrderedAlphabet& alphabet() const noexcept { return dfa_.alphabet(); }

 private:
  Dfa dfa_;
};

BigInt density(const Dfa& d, std::size_t length);
// Σ_{n ≤ max_length} density(d, n).
BigInt count_words_up_to(const Dfa& d, std::size_t max_length);

// Radix position of w (0-based). Throws NotInLanguage.
BigInt rank(const NumerationSystem& s, const Word& w);
BigInt rank(CountTable& table, const Word& w);
// The word of radix position n.
Word unrank(const NumerationSystem& s, const BigInt& n);
Word unrank(CountTable& table, const BigInt& n);

// I(L): the radix-least word of every non-empty length.
Dfa min_words(const Dfa& d);
// Removes the `count` radix-least words of every length.
Dfa strip_first(const Dfa& d, std::size_t count);

inline constexpr std::size_t kDefaultStateBudget = 1'000'000;

// Words of L whose rank is ≡ residue (mod modulus). Throws ResourceLimit
// when the intermediate automaton exceeds `state_budget` states.
Dfa decimate(const NumerationSystem& s, std::uint32_t modulus, std::uint32_t residue,
             std::size_t state_budget = kDefaultStateBudget);

}  // namespace polyrec
