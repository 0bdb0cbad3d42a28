#include "polyrec/automaton.hpp"

#include <algorithm>

#include "polyrec/error.hpp"

namespace polyrec {

Dfa::Dfa(OrderedAlphabet alphabet, std::size_t state_count, StateId initial)
    : alphabet_(std::move(alphabet)),
      initial_(initial),
      finals_(state_count, 0),
      table_(state_count * alphabet_.size(), kNoState) {
  if (state_count == 0) throw Error(ErrorCode::InvalidArgument, "a Dfa needs at least one state");
  set_initial(initial);
}

StateId Dfa::run(const Word& w) const { return run_from(initial_, w); }

StateId Dfa::run_from(StateId q, const Word& w) const {
  for (Symbol s : w) {
    if (q == kNoState) return kNoState;
    if (s >= letter_count()) throw Error(ErrorCode::UnknownLetter, "symbol out of range");
    q = next(q, s);
  }
  return q;
}

StateId Dfa::add_state(bool final) {
  finals_.push_back(final ? 1 : 0);
  table_.resize(table_.size() + alphabet_.size(), kNoState);
  return static_cast<StateId>(finals_.size() - 1);
}

void Dfa::set_initial(StateId q) {
  if (q < 0 || static_cast<std::size_t>(q) >= state_count())
    throw Error(ErrorCode::UnknownState, "initial state out of range");
  initial_ = q;
}

void Dfa::set_final(StateId q, bool final) { finals_.at(q) = final ? 1 : 0; }

void Dfa::set_transition(StateId from, Symbol s, StateId to) {
  if (from < 0 || static_cast<std::size_t>(from) >= state_count() ||
      (to != kNoState && (to < 0 || static_cast<std::size_t>(to) >= state_count())))
    throw Error(ErrorCode::UnknownState, "transition state out of range");
  if (s >= letter_count()) throw Error(ErrorCode::UnknownLetter, "symbol out of range");
  table_[static_cast<std::size_t>(from) * alphabet_.size() + s] = to;
}

std::vector<StateId> Dfa::finals() const {
  std::vector<StateId> out;
  for (std::size_t q = 0; q < finals_.size(); ++q)
    if (finals_[q]) out.push_back(static_cast<StateId>(q));
  return out;
}

Nfa::Nfa(OrderedAlphabet alphabet, std::size_t state_count)
    : alphabet_(std::move(alphabet)),
      finals_(state_count, 0),
      moves_(state_count * alphabet_.size()),
      epsilon_(state_count) {}

void Nfa::check(StateId q) const {
  if (q < 0 || static_cast<std::size_t>(q) >= state_count())
    throw Error(ErrorCode::UnknownState, "Nfa state out of range");
}

StateId Nfa::add_state(bool final) {
  finals_.push_back(final ? 1 : 0);
  moves_.resize(moves_.size() + alphabet_.size());
  epsilon_.emplace_back();
  return static_cast<StateId>(finals_.size() - 1);
}

void Nfa::add_initial(StateId q) {
  check(q);
  if (std::find(initials_.begin(), initials_.end(), q) == initials_.end()) initials_.push_back(q);
}

void Nfa::set_final(StateId q, bool final) {
  check(q);
  finals_[q] = final ? 1 : 0;
}

void Nfa::add_transition(StateId from, Symbol s, StateId to) {
  check(from);
  check(to);
  if (s >= alphabet_.size()) throw Error(ErrorCode::UnknownLetter, "symbol out of range");
  auto& v = moves_[static_cast<std::size_t>(from) * alphabet_.size() + s];
  if (std::find(v.begin(), v.end(), to) == v.end()) v.push_back(to);
}

void Nfa::add_epsilon(StateId from, StateId to) {
  check(from);
  check(to);
  auto& v = epsilon_[from];
  if (std::find(v.begin(), v.end(), to) == v.end()) v.push_back(to);
}

std::vector<StateId> Nfa::closure(std::vector<StateId> states) const {
  std::vector<char> seen(state_count(), 0);
  std::vector<StateId> stack;
  for (StateId q : states)
    if (!seen[q]) {
      seen[q] = 1;
      stack.push_back(q);
    }
  std::vector<StateId> out;
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    out.push_back(q);
    for (StateId r : epsilon_[q])
      if (!seen[r]) {
        seen[r] = 1;
        stack.push_back(r);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polyrec
