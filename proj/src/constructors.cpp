#include "polyrec/constructors.hpp"

#include <vector>

#include "polyrec/automata.hpp"
#include "polyrec/enumeration.hpp"
#include "polyrec/error.hpp"

namespace polyrec {

namespace {

Dfa star(LetterAllocator& fresh) {
  Dfa d(OrderedAlphabet({fresh.next()}), 1);
  d.set_final(0);
  d.set_transition(0, 0, 0);
  return d;
}

// a⁺b* (from_zero = false) or a*b* (from_zero = true).
Dfa chain_pair(LetterAllocator& fresh, bool from_zero) {
  Dfa d(OrderedAlphabet(fresh.take(2)), 3);
  d.set_final(0, from_zero);
  d.set_final(1);
  d.set_final(2);
  d.set_transition(0, 0, 1);
  d.set_transition(1, 0, 1);
  d.set_transition(from_zero ? 0 : 1, 1, 2);
  d.set_transition(1, 1, 2);
  d.set_transition(2, 1, 2);
  return minimize(d);
}

Dfa single_letter(const std::string& token) {
  Dfa d(OrderedAlphabet({token}), 2);
  d.set_final(1);
  d.set_transition(0, 0, 1);
  return d;
}

Dfa exactly_b(std::size_t t, LetterAllocator& fresh) {
  Dfa d(OrderedAlphabet(fresh.take(2)), t + 1);
  d.set_final(static_cast<StateId>(t));
  for (std::size_t i = 0; i <= t; ++i) {
    d.set_transition(static_cast<StateId>(i), 0, static_cast<StateId>(i));
    if (i < t) d.set_transition(static_cast<StateId>(i), 1, static_cast<StateId>(i + 1));
  }
  return d;
}

std::size_t to_count(const BigInt& v) {
  if (v > 100000) throw Error(ErrorCode::ResourceLimit, "copy count too large");
  return v.convert_to<std::size_t>();
}

}  // namespace

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
  return row[k];
}

BigInt stirling2(std::size_t n, std::size_t k) {
  // S(i, j) = j S(i-1, j) + S(i-1, j-1)
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = std::min(i, k); j >= 1; --j) row[j] = BigInt(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

Dfa build_power(std::size_t k, LetterAllocator& fresh) {
  if (k == 0) return star(fresh);
  if (k == 1) return chain_pair(fresh, false);
  Dfa base = build_power_base(k, fresh);
  Dfa sigma = single_letter(fresh.next());
  return minimize(determinize(shuffle(base, sigma)));
}

Dfa build_power_base(std::size_t k, LetterAllocator& fresh) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "build_power_base needs k >= 1");
  if (k == 1) return star(fresh);
  if (k == 2) return chain_pair(fresh, true);
  std::vector<Dfa> parts;
  for (std::size_t j = k; j-- > 0;) {
    std::size_t copies = to_count(binomial(k - 1, j));
    for (std::size_t c = 0; c < copies; ++c) parts.push_back(build_power(j, fresh));
  }
  return minimize(disjoint_union(parts));
}

Dfa build_const(std::size_t c, LetterAllocator& fresh) {
  if (c == 0) throw Error(ErrorCode::InvalidArgument, "build_const needs c >= 1");
  Dfa d(OrderedAlphabet(fresh.take(c)), 2);
  d.set_final(1);
  for (Symbol s = 0; s < c; ++s) d.set_transition(0, s, 1);
  d.set_transition(1, 0, 1);
  return d;
}

Dfa build_stirling(std::size_t k, LetterAllocator& fresh) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "build_stirling needs k >= 1");
  std::vector<Dfa> parts;
  for (std::size_t t = k; t >= 1; --t) {
    std::size_t copies = to_count(factorial(t) * stirling2(k, t));
    for (std::size_t c = 0; c < copies; ++c) parts.push_back(exactly_b(t, fresh));
  }
  return minimize(disjoint_union(parts));
}

Dfa lemma_language(std::size_t k, std::size_t alpha, LetterAllocator& fresh) {
  if (k == 0 || alpha == 0) throw Error(ErrorCode::InvalidArgument, "lemma_language needs k >= 1 and alpha >= 1");
  if (k == 1) return strip_first(build_power(1, fresh), alpha);
  Dfa lk = build_power(k, fresh);
  // The shuffled letter is the last one of L_k's alphabet; every word of
  // L_k contains it exactly once.
  const auto sigma = static_cast<Symbol>(lk.letter_count() - 1);
  return minimize(product(lk, letter_in_suffix(lk.alphabet(), sigma, alpha), ProductMode::Difference));
}

BigInt min_alphabet_size(std::size_t k) {
  std::vector<BigInt> u{1, 2, 3};
  for (std::size_t m = 3; m <= k; ++m) {
    BigInt sum = 1;
    for (std::size_t j = 0; j < m; ++j) sum += u[j] * binomial(m - 1, j);
    u.push_back(sum);
  }
  return u[k];
}

}  // namespace polyrec
