#include "polyrec/automata.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "polyrec/error.hpp"
#include "hash.hpp"

namespace polyrec {

namespace {

void require_same_alphabet(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet()))
    throw Error(ErrorCode::AlphabetMismatch, "operands use different ordered alphabets");
}

std::vector<char> coreachable(const Dfa& d) {
  std::vector<std::vector<StateId>> preds(d.state_count());
  for (std::size_t q = 0; q < d.state_count(); ++q)
    for (Symbol s = 0; s < d.letter_count(); ++s) {
      StateId t = d.next(static_cast<StateId>(q), s);
      if (t != kNoState) preds[t].push_back(static_cast<StateId>(q));
    }
  std::vector<char> live(d.state_count(), 0);
  std::vector<StateId> stack = d.finals();
  for (StateId q : stack) live[q] = 1;
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (StateId p : preds[q])
      if (!live[p]) {
        live[p] = 1;
        stack.push_back(p);
      }
  }
  return live;
}

// Pair product over partial automata; kNoState stands for the sink.
template <class Keep, class Final>
Dfa pair_product(const Dfa& a, const Dfa& b, Keep keep, Final final) {
  using Key = std::pair<StateId, StateId>;
  std::unordered_map<Key, StateId, PairHash> ids;
  std::vector<Key> states;
  auto intern = [&](Key k) {
    auto [it, fresh] = ids.emplace(k, static_cast<StateId>(states.size()));
    if (fresh) states.push_back(k);
    return it->second;
  };
  intern({a.initial(), b.initial()});
  std::vector<std::vector<StateId>> rows;
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [p, q] = states[i];
    std::vector<StateId> row(a.letter_count(), kNoState);
    for (Symbol s = 0; s < a.letter_count(); ++s) {
      StateId p2 = p == kNoState ? kNoState : a.next(p, s);
      StateId q2 = q == kNoState ? kNoState : b.next(q, s);
      if (keep(p2, q2)) row[s] = intern({p2, q2});
    }
    rows.push_back(std::move(row));
  }
  Dfa out(a.alphabet(), states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [p, q] = states[i];
    bool pf = p != kNoState && a.is_final(p);
    bool qf = q != kNoState && b.is_final(q);
    out.set_final(static_cast<StateId>(i), final(pf, qf));
    for (Symbol s = 0; s < a.letter_count(); ++s)
      if (rows[i][s] != kNoState) out.set_transition(static_cast<StateId>(i), s, rows[i][s]);
  }
  return trim(out);
}

}  // namespace

Dfa empty_language(const OrderedAlphabet& alphabet) { return Dfa(alphabet, 1); }

Dfa universal_language(const OrderedAlphabet& alphabet) {
  Dfa d(alphabet, 1);
  d.set_final(0);
  for (Symbol s = 0; s < alphabet.size(); ++s) d.set_transition(0, s, 0);
  return d;
}

Dfa finite_language(const OrderedAlphabet& alphabet, const std::vector<Word>& words) {
  Dfa d(alphabet, 1);
  for (const Word& w : words) {
    StateId q = d.initial();
    for (Symbol s : w) {
      if (s >= alphabet.size()) throw Error(ErrorCode::UnknownLetter, "symbol out of range");
      StateId t = d.next(q, s);
      if (t == kNoState) {
        t = d.add_state();
        d.set_transition(q, s, t);
      }
      q = t;
    }
    d.set_final(q);
  }
  return trim(d);
}

Dfa trim(const Dfa& d) {
  auto live = coreachable(d);
  if (!live[d.initial()]) return empty_language(d.alphabet());
  std::vector<StateId> order{d.initial()};
  std::vector<StateId> id(d.state_count(), kNoState);
  id[d.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Symbol s = 0; s < d.letter_count(); ++s) {
      StateId t = d.next(order[i], s);
      if (t != kNoState && live[t] && id[t] == kNoState) {
        id[t] = static_cast<StateId>(order.size());
        order.push_back(t);
      }
    }
  Dfa out(d.alphabet(), order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    StateId q = order[i];
    out.set_final(static_cast<StateId>(i), d.is_final(q));
    for (Symbol s = 0; s < d.letter_count(); ++s) {
      StateId t = d.next(q, s);
      if (t != kNoState && live[t]) out.set_transition(static_cast<StateId>(i), s, id[t]);
    }
  }
  return out;
}

Nfa to_nfa(const Dfa& d) {
  Nfa n(d.alphabet(), d.state_count());
  n.add_initial(d.initial());
  for (std::size_t q = 0; q < d.state_count(); ++q) {
    auto sq = static_cast<StateId>(q);
    n.set_final(sq, d.is_final(sq));
    for (Symbol s = 0; s < d.letter_count(); ++s)
      if (StateId t = d.next(sq, s); t != kNoState) n.add_transition(sq, s, t);
  }
  return n;
}

bool is_empty(const Dfa& d) { return !coreachable(d)[d.initial()]; }

bool is_infinite(const Dfa& d) {
  Dfa t = trim(d);
  if (is_empty(t)) return false;
  // Every state of a trimmed automaton is useful; look for any cycle.
  std::vector<int> color(t.state_count(), 0);
  std::vector<std::pair<StateId, Symbol>> stack;
  for (std::size_t root = 0; root < t.state_count(); ++root) {
    if (color[root]) continue;
    stack.push_back({static_cast<StateId>(root), 0});
    color[root] = 1;
    while (!stack.empty()) {
      auto& [q, s] = stack.back();
      if (s == t.letter_count()) {
        color[q] = 2;
        stack.pop_back();
        continue;
      }
      StateId r = t.next(q, s++);
      if (r == kNoState) continue;
      if (color[r] == 1) return true;
      if (color[r] == 0) {
        color[r] = 1;
        stack.push_back({r, 0});
      }
    }
  }
  return false;
}

Dfa with_alphabet(const Dfa& d, const OrderedAlphabet& alphabet) {
  if (!d.alphabet().same_tokens(alphabet))
    throw Error(ErrorCode::AlphabetMismatch, "reordering needs the same token set");
  std::map<std::string, std::string> identity;
  for (const auto& t : d.alphabet().tokens()) identity.emplace(t, t);
  return embed(d, alphabet, identity);
}

Dfa determinize(const Nfa& n) {
  std::unordered_map<std::vector<StateId>, StateId, VectorHash> ids;
  std::vector<std::vector<StateId>> subsets;
  auto intern = [&](std::vector<StateId> set) {
    auto [it, fresh] = ids.emplace(set, static_cast<StateId>(subsets.size()));
    if (fresh) subsets.push_back(std::move(set));
    return it->second;
  };
  intern(n.closure(n.initials()));
  const std::size_t k = n.alphabet().size();
  std::vector<StateId> table;
  std::vector<char> seen(n.state_count(), 0);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Symbol s = 0; s < k; ++s) {
      std::vector<StateId> next;
      for (StateId q : subsets[i])
        for (StateId r : n.targets(q, s))
          if (!seen[r]) {
            seen[r] = 1;
            next.push_back(r);
          }
      for (StateId r : next) seen[r] = 0;
      if (next.empty()) {
        table.push_back(kNoState);
        continue;
      }
      table.push_back(intern(n.closure(std::move(next))));
    }
  }
  Dfa d(n.alphabet(), subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    bool fin = std::any_of(subsets[i].begin(), subsets[i].end(), [&](StateId q) { return n.is_final(q); });
    d.set_final(static_cast<StateId>(i), fin);
    for (Symbol s = 0; s < k; ++s)
      if (StateId t = table[i * k + s]; t != kNoState) d.set_transition(static_cast<StateId>(i), s, t);
  }
  return trim(d);
}

// Hopcroft partition refinement on the completed automaton.
Dfa minimize(const Dfa& input) {
  Dfa d = trim(input);
  const std::size_t k = d.letter_count();
  const std::size_t n = d.state_count() + 1;  // last state is the sink
  const auto sink = static_cast<StateId>(n - 1);
  auto delta = [&](StateId q, Symbol s) -> StateId {
    if (q == sink) return sink;
    StateId t = d.next(q, s);
    return t == kNoState ? sink : t;
  };

  // Inverse transitions in CSR form, per letter.
  std::vector<std::vector<std::size_t>> inv_start(k, std::vector<std::size_t>(n + 1, 0));
  std::vector<std::vector<StateId>> inv(k, std::vector<StateId>(n));
  for (Symbol s = 0; s < k; ++s) {
    auto& start = inv_start[s];
    for (std::size_t q = 0; q < n; ++q) ++start[delta(static_cast<StateId>(q), s) + 1];
    for (std::size_t i = 0; i < n; ++i) start[i + 1] += start[i];
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (std::size_t q = 0; q < n; ++q) inv[s][fill[delta(static_cast<StateId>(q), s)]++] = static_cast<StateId>(q);
  }

  std::vector<StateId> elems(n);
  std::vector<std::size_t> loc(n), block_of(n);
  std::vector<std::size_t> first, last, marked;
  {
    std::size_t pos = 0;
    for (int want = 1; want >= 0; --want) {
      std::size_t begin = pos;
      for (std::size_t q = 0; q < n; ++q) {
        bool fin = static_cast<StateId>(q) != sink && d.is_final(static_cast<StateId>(q));
        if (fin == (want == 1)) {
          elems[pos] = static_cast<StateId>(q);
          loc[q] = pos++;
          block_of[q] = first.size();
        }
      }
      if (pos > begin) {
        first.push_back(begin);
        last.push_back(pos);
        marked.push_back(0);
      }
    }
  }

  std::vector<char> in_work;
  std::deque<std::pair<std::size_t, Symbol>> work;
  auto push = [&](std::size_t b, Symbol s) {
    if (in_work.size() < (b + 1) * k) in_work.resize((b + 1) * k, 0);
    if (!in_work[b * k + s]) {
      in_work[b * k + s] = 1;
      work.emplace_back(b, s);
    }
  };
  for (std::size_t b = 0; b < first.size(); ++b)
    for (Symbol s = 0; s < k; ++s) push(b, s);

  std::vector<std::size_t> touched;
  std::vector<StateId> splitter;
  while (!work.empty()) {
    auto [a, s] = work.front();
    work.pop_front();
    in_work[a * k + s] = 0;
    splitter.assign(elems.begin() + first[a], elems.begin() + last[a]);
    touched.clear();
    for (StateId t : splitter) {
      for (std::size_t i = inv_start[s][t]; i < inv_start[s][t + 1]; ++i) {
        StateId p = inv[s][i];
        std::size_t b = block_of[p];
        std::size_t target = first[b] + marked[b];
        if (loc[p] < target) continue;  // already marked
        if (marked[b] == 0) touched.push_back(b);
        StateId other = elems[target];
        std::swap(elems[loc[p]], elems[target]);
        loc[other] = loc[p];
        loc[p] = target;
        ++marked[b];
      }
    }
    for (std::size_t b : touched) {
      std::size_t m = marked[b];
      marked[b] = 0;
      if (m == last[b] - first[b]) continue;
      std::size_t nb = first.size();
      first.push_back(first[b]);
      last.push_back(first[b] + m);
      marked.push_back(0);
      first[b] += m;
      for (std::size_t i = first[nb]; i < last[nb]; ++i) block_of[elems[i]] = nb;
      if (in_work.size() < (nb + 1) * k) in_work.resize((nb + 1) * k, 0);
      std::size_t smaller = (last[nb] - first[nb]) <= (last[b] - first[b]) ? nb : b;
      for (Symbol c = 0; c < k; ++c) {
        if (in_work[b * k + c])
          push(nb, c);
        else
          push(smaller, c);
      }
    }
  }

  const std::size_t sink_block = block_of[sink];
  Dfa q(d.alphabet(), first.size(), static_cast<StateId>(block_of[d.initial()]));
  for (std::size_t st = 0; st + 1 < n; ++st) {
    auto sst = static_cast<StateId>(st);
    std::size_t b = block_of[st];
    q.set_final(static_cast<StateId>(b), d.is_final(sst));
    for (Symbol s = 0; s < k; ++s) {
      StateId t = d.next(sst, s);
      if (t != kNoState && block_of[t] != sink_block)
        q.set_transition(static_cast<StateId>(b), s, static_cast<StateId>(block_of[t]));
    }
  }
  return trim(q);
}

Dfa product(const Dfa& a, const Dfa& b, ProductMode mode) {
  require_same_alphabet(a, b);
  switch (mode) {
    case ProductMode::Union:
      return pair_product(
          a, b, [](StateId p, StateId q) { return p != kNoState || q != kNoState; },
          [](bool x, bool y) { return x || y; });
    case ProductMode::Intersection:
      return pair_product(
          a, b, [](StateId p, StateId q) { return p != kNoState && q != kNoState; },
          [](bool x, bool y) { return x && y; });
    case ProductMode::Difference:
      return pair_product(
          a, b, [](StateId p, StateId) { return p != kNoState; },
          [](bool x, bool y) { return x && !y; });
  }
  throw Error(ErrorCode::InvalidArgument, "unknown product mode");
}

Dfa complement(const Dfa& d) {
  Dfa c(d.alphabet(), d.state_count() + 1, d.initial());
  const auto sink = static_cast<StateId>(d.state_count());
  c.set_final(sink);
  for (std::size_t q = 0; q < d.state_count(); ++q) {
    auto sq = static_cast<StateId>(q);
    c.set_final(sq, !d.is_final(sq));
    for (Symbol s = 0; s < d.letter_count(); ++s) {
      StateId t = d.next(sq, s);
      c.set_transition(sq, s, t == kNoState ? sink : t);
    }
  }
  for (Symbol s = 0; s < d.letter_count(); ++s) c.set_transition(sink, s, sink);
  return trim(c);
}

Nfa reverse(const Dfa& d) {
  Nfa n(d.alphabet(), d.state_count());
  for (StateId f : d.finals()) n.add_initial(f);
  n.set_final(d.initial());
  for (std::size_t q = 0; q < d.state_count(); ++q)
    for (Symbol s = 0; s < d.letter_count(); ++s)
      if (StateId t = d.next(static_cast<StateId>(q), s); t != kNoState)
        n.add_transition(t, s, static_cast<StateId>(q));
  return n;
}

Nfa shuffle(const Dfa& a, const Dfa& b) {
  OrderedAlphabet sigma = a.alphabet().merged_with(b.alphabet());
  const std::size_t nb = b.state_count();
  Nfa n(sigma, a.state_count() * nb);
  auto id = [&](StateId p, StateId q) { return static_cast<StateId>(p * nb + q); };
  std::vector<int> in_a(sigma.size(), -1), in_b(sigma.size(), -1);
  for (Symbol s = 0; s < sigma.size(); ++s) {
    if (a.alphabet().contains(sigma.token(s))) in_a[s] = static_cast<int>(a.alphabet().index_of(sigma.token(s)));
    if (b.alphabet().contains(sigma.token(s))) in_b[s] = static_cast<int>(b.alphabet().index_of(sigma.token(s)));
  }
  n.add_initial(id(a.initial(), b.initial()));
  for (std::size_t p = 0; p < a.state_count(); ++p)
    for (std::size_t q = 0; q < nb; ++q) {
      auto sp = static_cast<StateId>(p);
      auto sq = static_cast<StateId>(q);
      n.set_final(id(sp, sq), a.is_final(sp) && b.is_final(sq));
      for (Symbol s = 0; s < sigma.size(); ++s) {
        if (in_a[s] >= 0)
          if (StateId t = a.next(sp, static_cast<Symbol>(in_a[s])); t != kNoState) n.add_transition(id(sp, sq), s, id(t, sq));
        if (in_b[s] >= 0)
          if (StateId t = b.next(sq, static_cast<Symbol>(in_b[s])); t != kNoState) n.add_transition(id(sp, sq), s, id(sp, t));
      }
    }
  return n;
}

Dfa embed(const Dfa& a, const OrderedAlphabet& target, const std::map<std::string, std::string>& rename) {
  std::vector<Symbol> image(a.letter_count());
  std::set<Symbol> used;
  for (Symbol s = 0; s < a.letter_count(); ++s) {
    auto it = rename.find(a.alphabet().token(s));
    if (it == rename.end())
      throw Error(ErrorCode::LetterNotInTarget, "no image for letter '" + a.alphabet().token(s) + "'");
    if (!target.contains(it->second))
      throw Error(ErrorCode::LetterNotInTarget, "image '" + it->second + "' is not in the target alphabet");
    image[s] = target.index_of(it->second);
    if (!used.insert(image[s]).second) throw Error(ErrorCode::NonInjectiveRename, "two letters share image '" + it->second + "'");
  }
  Dfa out(target, a.state_count(), a.initial());
  for (std::size_t q = 0; q < a.state_count(); ++q) {
    auto sq = static_cast<StateId>(q);
    out.set_final(sq, a.is_final(sq));
    for (Symbol s = 0; s < a.letter_count(); ++s)
      if (StateId t = a.next(sq, s); t != kNoState) out.set_transition(sq, image[s], t);
  }
  return out;
}

Dfa disjoint_union(std::span<const Dfa> parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "disjoint_union of nothing");
  std::vector<std::string> tokens;
  std::unordered_set<std::string> seen;
  for (const Dfa& p : parts)
    for (const auto& t : p.alphabet().tokens()) {
      if (!seen.insert(t).second) throw Error(ErrorCode::OverlappingAlphabets, "letter '" + t + "' appears in two parts");
      tokens.push_back(t);
    }
  OrderedAlphabet sigma(std::move(tokens));
  std::size_t total = 1;
  for (const Dfa& p : parts) total += p.state_count();
  Dfa out(sigma, total, 0);
  StateId offset = 1;
  Symbol letter_offset = 0;
  for (const Dfa& p : parts) {
    if (p.is_final(p.initial())) out.set_final(0);
    for (std::size_t q = 0; q < p.state_count(); ++q) {
      auto sq = static_cast<StateId>(q);
      out.set_final(offset + sq, p.is_final(sq));
      for (Symbol s = 0; s < p.letter_count(); ++s)
        if (StateId t = p.next(sq, s); t != kNoState) {
          out.set_transition(offset + sq, letter_offset + s, offset + t);
          if (sq == p.initial()) out.set_transition(0, letter_offset + s, offset + t);
        }
    }
    offset += static_cast<StateId>(p.state_count());
    letter_offset += static_cast<Symbol>(p.letter_count());
  }
  return trim(out);
}

bool accepts(const Dfa& d, const Word& w) {
  StateId q = d.run(w);
  return q != kNoState && d.is_final(q);
}

bool accepts(const Dfa& d, const TokenWord& w) { return accepts(d, d.alphabet().encode(w)); }

Equivalence equivalent(const Dfa& a, const Dfa& b_in) {
  if (!a.alphabet().same_tokens(b_in.alphabet()))
    throw Error(ErrorCode::AlphabetMismatch, "equivalence needs the same token set");
  Dfa b = a.alphabet() == b_in.alphabet() ? b_in : with_alphabet(b_in, a.alphabet());
  using Key = std::pair<StateId, StateId>;
  std::unordered_map<Key, std::size_t, PairHash> ids;
  std::vector<Key> nodes;
  std::vector<std::pair<std::size_t, Symbol>> parent;
  auto visit = [&](Key k, std::size_t from, Symbol s) {
    if (ids.emplace(k, nodes.size()).second) {
      nodes.push_back(k);
      parent.emplace_back(from, s);
    }
  };
  visit({a.initial(), b.initial()}, 0, 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto [p, q] = nodes[i];
    bool pf = p != kNoState && a.is_final(p);
    bool qf = q != kNoState && b.is_final(q);
    if (pf != qf) {
      Word w;
      for (std::size_t j = i; j != 0; j = parent[j].first) w.push_back(parent[j].second);
      std::reverse(w.begin(), w.end());
      return {false, a.alphabet().decode(w)};
    }
    for (Symbol s = 0; s < a.letter_count(); ++s) {
      StateId p2 = p == kNoState ? kNoState : a.next(p, s);
      StateId q2 = q == kNoState ? kNoState : b.next(q, s);
      if (p2 == kNoState && q2 == kNoState) continue;
      visit({p2, q2}, i, s);
    }
  }
  return {};
}

Dfa modify_finite(const Dfa& d, const std::vector<TokenWord>& add, const std::vector<TokenWord>& remove) {
  std::set<TokenWord> add_set(add.begin(), add.end());
  for (const auto& w : remove)
    if (add_set.count(w)) throw Error(ErrorCode::InvalidArgument, "word '" + format_word(w) + "' both added and removed");

  std::vector<std::string> tokens = d.alphabet().tokens();
  std::unordered_set<std::string> known(tokens.begin(), tokens.end());
  for (const auto& w : add)
    for (const auto& t : w)
      if (known.insert(t).second) tokens.push_back(t);
  OrderedAlphabet sigma(std::move(tokens));
  Dfa base = sigma == d.alphabet() ? d : embed(d, sigma, [&] {
    std::map<std::string, std::string> id;
    for (const auto& t : d.alphabet().tokens()) id.emplace(t, t);
    return id;
  }());

  std::vector<Word> add_words, remove_words;
  for (const auto& w : remove) {
    Word enc = sigma.encode(w);
    if (!accepts(base, enc)) throw Error(ErrorCode::WordAbsent, "'" + format_word(w) + "' is not in the language");
    remove_words.push_back(std::move(enc));
  }
  for (const auto& w : add) {
    Word enc = sigma.encode(w);
    if (accepts(base, enc)) throw Error(ErrorCode::WordAlreadyPresent, "'" + format_word(w) + "' is already in the language");
    add_words.push_back(std::move(enc));
  }
  Dfa out = base;
  if (!remove_words.empty()) out = product(out, finite_language(sigma, remove_words), ProductMode::Difference);
  if (!add_words.empty()) out = product(out, finite_language(sigma, add_words), ProductMode::Union);
  return out;
}

Dfa position_pattern(const OrderedAlphabet& alphabet, Symbol sigma, std::size_t offset) {
  if (sigma >= alphabet.size()) throw Error(ErrorCode::UnknownLetter, "pattern letter out of range");
  Nfa n(alphabet, offset + 2);
  n.add_initial(0);
  for (Symbol s = 0; s < alphabet.size(); ++s) n.add_transition(0, s, 0);
  n.add_transition(0, sigma, 1);
  for (std::size_t i = 1; i <= offset; ++i)
    for (Symbol s = 0; s < alphabet.size(); ++s)
      n.add_transition(static_cast<StateId>(i), s, static_cast<StateId>(i + 1));
  n.set_final(static_cast<StateId>(offset + 1));
  return minimize(determinize(n));
}

Dfa letter_in_suffix(const OrderedAlphabet& alphabet, Symbol sigma, std::size_t window) {
  if (sigma >= alphabet.size()) throw Error(ErrorCode::UnknownLetter, "pattern letter out of range");
  // State i < window: the last σ was followed by i letters. State `window`:
  // no σ within the last `window` letters.
  Dfa d(alphabet, window + 1, static_cast<StateId>(window));
  for (std::size_t i = 0; i <= window; ++i) {
    auto si = static_cast<StateId>(i);
    d.set_final(si, i < window);
    for (Symbol s = 0; s < alphabet.size(); ++s)
      d.set_transition(si, s, s == sigma ? 0 : static_cast<StateId>(std::min(i + 1, window)));
  }
  return trim(d);
}

Dfa restrict_min_length(const Dfa& d, std::size_t min_length) {
  if (min_length == 0) return trim(d);
  Dfa gate(d.alphabet(), min_length + 1);
  gate.set_final(static_cast<StateId>(min_length));
  for (std::size_t i = 0; i <= min_length; ++i)
    for (Symbol s = 0; s < d.letter_count(); ++s)
      gate.set_transition(static_cast<StateId>(i), s, static_cast<StateId>(std::min(i + 1, min_length)));
  return product(d, gate, ProductMode::Intersection);
}

}  // namespace polyrec
