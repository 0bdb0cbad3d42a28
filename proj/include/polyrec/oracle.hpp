#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polyrec/automaton.hpp"
#include "polyrec/bigint.hpp"

// Brute-force reference semantics. Everything here is built from plain
// per-length backtracking over the automaton's transitions; nothing uses the
// counting tables of enumeration.hpp.
namespace polyrec::oracle {

struct Budget {
  std::size_t max_words = 100000;
  std::size_t max_length = 20;
};

// Produces the words of L(d) in radix order, one at a time.
class EnumerationCursor {
 public:
  // Enumeration ends quietly after words of length `stop_after`.
  explicit EnumerationCursor(const Dfa& d, Budget budget = {}, std::size_t stop_after = SIZE_MAX);

  // False once the language is exhausted. Throws BudgetExceeded when the
  // next word would be longer than the length budget.
  bool next(Word& out);
  std::size_t emitted() const noexcept { return emitted_; }
  std::size_t length() const noexcept { return length_; }

 private:
  struct Frame {
    StateId state;
    Symbol letter;
  };
  void start_length();

  const Dfa* dfa_;
  Budget budget_;
  std::vector<char> live_;
  std::size_t stop_after_;
  std::vector<Frame> stack_;
  Word word_;
  std::size_t length_ = 0;
  std::size_t emitted_ = 0;
  bool reached_full_ = false;
  bool done_ = false;
};

// First `limit` words (fewer if the language runs out).
std::vector<Word> enumerate_radix(const Dfa& d, std::size_t limit, Budget budget = {});

BigInt oracle_density(const Dfa& d, std::size_t length, Budget budget = {});
BigInt oracle_rank(const Dfa& d, const Word& w, Budget budget = {});
// Radix-least word of each length ≤ max_length that has any word.
std::vector<Word> oracle_min_words(const Dfa& d, std::size_t max_length, Budget budget = {});
// Every modulus-th enumerated word starting at index residue, at most
// `limit` of them.
std::vector<Word> oracle_decimate(const Dfa& d, std::size_t modulus, std::size_t residue, std::size_t limit,
                                  Budget budget = {});

}  // namespace polyrec::oracle
