#include "polyrec/oracle.hpp"

#include "polyrec/error.hpp"

namespace polyrec::oracle {

namespace {

std::vector<char> live_states(const Dfa& d) {
  std::vector<char> live(d.state_count(), 0);
  for (std::size_t q = 0; q < d.state_count(); ++q) live[q] = d.is_final(static_cast<StateId>(q));
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q < d.state_count(); ++q) {
      if (live[q]) continue;
      for (Symbol s = 0; s < d.letter_count(); ++s) {
        StateId t = d.next(static_cast<StateId>(q), s);
        if (t != kNoState && live[t]) {
          live[q] = 1;
          changed = true;
          break;
        }
      }
    }
  }
  return live;
}

}  // namespace

EnumerationCursor::EnumerationCursor(const Dfa& d, Budget budget, std::size_t stop_after)
    : dfa_(&d), budget_(budget), live_(live_states(d)), stop_after_(stop_after) {
  if (!live_[d.initial()])
    done_ = true;
  else
    start_length();
}

void EnumerationCursor::start_length() {
  stack_.assign(1, Frame{dfa_->initial(), 0});
  word_.clear();
  reached_full_ = false;
}

bool EnumerationCursor::next(Word& out) {
  const Dfa& d = *dfa_;
  while (!done_) {
    if (stack_.empty()) {
      // No live path of this length means none of any greater length.
      if (!reached_full_) {
        done_ = true;
        break;
      }
      ++length_;
      if (length_ > stop_after_) {
        done_ = true;
        break;
      }
      if (length_ > budget_.max_length)
        throw Error(ErrorCode::BudgetExceeded, "enumeration passed length " + std::to_string(budget_.max_length));
      start_length();
      continue;
    }
    Frame& top = stack_.back();
    if (word_.size() == length_) {
      StateId q = top.state;
      stack_.pop_back();
      reached_full_ = true;
      bool hit = d.is_final(q);
      Word copy;
      if (hit) copy = word_;
      if (!word_.empty()) word_.pop_back();
      if (hit) {
        if (emitted_ >= budget_.max_words)
          throw Error(ErrorCode::BudgetExceeded, "enumeration passed " + std::to_string(budget_.max_words) + " words");
        ++emitted_;
        out = std::move(copy);
        return true;
      }
      continue;
    }
    bool pushed = false;
    while (top.letter < d.letter_count()) {
      Symbol s = top.letter++;
      StateId t = d.next(top.state, s);
      if (t != kNoState && live_[t]) {
        word_.push_back(s);
        stack_.push_back(Frame{t, 0});
        pushed = true;
        break;
      }
    }
    if (!pushed) {
      stack_.pop_back();
      if (!word_.empty()) word_.pop_back();
    }
  }
  return false;
}

std::vector<Word> enumerate_radix(const Dfa& d, std::size_t limit, Budget budget) {
  if (limit > budget.max_words)
    throw Error(ErrorCode::BudgetExceeded, "requested more words than the word budget");
  std::vector<Word> out;
  EnumerationCursor cur(d, budget);
  Word w;
  while (out.size() < limit && cur.next(w)) out.push_back(w);
  return out;
}

BigInt oracle_density(const Dfa& d, std::size_t length, Budget budget) {
  if (length > budget.max_length) throw Error(ErrorCode::BudgetExceeded, "length over budget");
  EnumerationCursor cur(d, budget, length);
  BigInt count = 0;
  Word w;
  while (cur.next(w)) {
    if (w.size() > length) break;
    if (w.size() == length) ++count;
  }
  return count;
}

BigInt oracle_rank(const Dfa& d, const Word& target, Budget budget) {
  EnumerationCursor cur(d, budget, target.size());
  Word w;
  BigInt index = 0;
  while (cur.next(w)) {
    if (w == target) return index;
    if (w.size() > target.size()) break;
    ++index;
  }
  throw Error(ErrorCode::NotInLanguage, "word not found by enumeration");
}

std::vector<Word> oracle_min_words(const Dfa& d, std::size_t max_length, Budget budget) {
  std::vector<Word> out;
  EnumerationCursor cur(d, budget, max_length);
  Word w;
  std::size_t last = SIZE_MAX;
  while (cur.next(w)) {
    if (w.size() > max_length) break;
    if (w.size() != last) {
      out.push_back(w);
      last = w.size();
    }
  }
  return out;
}

std::vector<Word> oracle_decimate(const Dfa& d, std::size_t modulus, std::size_t residue, std::size_t limit,
                                  Budget budget) {
  std::vector<Word> out;
  EnumerationCursor cur(d, budget);
  Word w;
  std::size_t index = 0;
  while (out.size() < limit && cur.next(w)) {
    if (index % modulus == residue) out.push_back(w);
    ++index;
  }
  return out;
}

}  // namespace polyrec::oracle
