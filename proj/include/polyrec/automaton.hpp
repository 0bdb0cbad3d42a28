#pragma once

#include <cstdint>
#include <vector>

#include "polyrec/alphabet.hpp"

namespace polyrec {

using StateId = std::int32_t;
inline constexpr StateId kNoState = -1;

// Partial deterministic automaton. A missing transition goes to an implicit
// rejecting sink.
class Dfa {
 public:
  Dfa() : Dfa(OrderedAlphabet{}, 1) {}
  Dfa(OrderedAlphabet alphabet, std::size_t state_count, StateId initial = 0);

  const OrderedAlphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return finals_.size(); }
  std::size_t letter_count() const noexcept { return alphabet_.size(); }
  StateId initial() const noexcept { return initial_; }
  bool is_final(StateId q) const { return finals_.at(q) != 0; }

  StateId next(StateId q, Symbol s) const {
    return table_[static_cast<std::size_t>(q) * alphabet_.size() + s];
  }
  // kNoState when the run falls into the sink.
  StateId run(const Word& w) const;
  StateId run_from(StateId q, const Word& w) const;

  StateId add_state(bool final = false);
  void set_initial(StateId q);
  void set_final(StateId q, bool final = true);
  void set_transition(StateId from, Symbol s, StateId to);

  std::vector<StateId> finals() const;

 private:
  OrderedAlphabet alphabet_;
  StateId initial_ = 0;
  std::vector<char> finals_;
  std::vector<StateId> table_;
};

class Nfa {
 public:
  Nfa(OrderedAlphabet alphabet, std::size_t state_count);

  const OrderedAlphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return finals_.size(); }

  StateId add_state(bool final = false);
  void add_initial(StateId q);
  void set_final(StateId q, bool final = true);
  void add_transition(StateId from, Symbol s, StateId to);
  void add_epsilon(StateId from, StateId to);

  const std::vector<StateId>& initials() const noexcept { return initials_; }
  bool is_final(StateId q) const { return finals_.at(q) != 0; }
  const std::vector<StateId>& targets(StateId q, Symbol s) const {
    return moves_[static_cast<std::size_t>(q) * alphabet_.size() + s];
  }
  const std::vector<StateId>& epsilon(StateId q) const { return epsilon_.at(q); }

  // Sorted epsilon closure.
  std::vector<StateId> closure(std::vector<StateId> states) const;

 private:
  void check(StateId q) const;

  OrderedAlphabet alphabet_;
  std::vector<StateId> initials_;
  std::vector<char> finals_;
  std::vector<std::vector<StateId>> moves_;
  std::vector<std::vector<StateId>> epsilon_;
};

}  // namespace polyrec
