#include "polyrec/pipeline.hpp"

#include <algorithm>
#include <set>

#include "polyrec/constructors.hpp"
#include "polyrec/error.hpp"
#include "polyrec/oracle.hpp"

namespace polyrec {

namespace {

std::size_t small(const BigInt& v, const char* what) {
  if (v < 0 || v > BigInt(1'000'000)) throw Error(ErrorCode::ResourceLimit, std::string(what) + " is too large");
  return v.convert_to<std::size_t>();
}

// Accepts words whose length lies in [lo, hi].
Dfa length_window(const OrderedAlphabet& sigma, std::size_t lo, std::size_t hi) {
  Dfa d(sigma, hi + 1);
  for (std::size_t i = 0; i <= hi; ++i) {
    d.set_final(static_cast<StateId>(i), i >= lo);
    if (i < hi)
      for (Symbol s = 0; s < sigma.size(); ++s) d.set_transition(static_cast<StateId>(i), s, static_cast<StateId>(i + 1));
  }
  return trim(d);
}

// Words of length |w| that are lexicographically ≥ w.
Dfa at_least(const OrderedAlphabet& sigma, const Word& w) {
  const std::size_t n = w.size();
  // States 0..n follow w exactly; n+1..2n are "already greater" at depth i-n.
  Dfa d(sigma, 2 * n + 1);
  auto greater = [&](std::size_t depth) { return static_cast<StateId>(n + depth); };
  d.set_final(static_cast<StateId>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto si = static_cast<StateId>(i);
    d.set_transition(si, w[i], static_cast<StateId>(i + 1));
    for (Symbol s = w[i] + 1; s < sigma.size(); ++s) d.set_transition(si, s, greater(i + 1));
    if (i >= 1)
      for (Symbol s = 0; s < sigma.size(); ++s) d.set_transition(greater(i), s, greater(i + 1));
  }
  if (n >= 1) d.set_final(greater(n));
  return trim(d);
}

}  // namespace

RationalPolynomial Decomposition::reconstruct() const {
  std::vector<Rational> c(plain.begin(), plain.end());
  for (const auto& b : borrows) {
    if (c.size() < b.degree + 2) c.resize(b.degree + 2);
    c[b.degree + 1] += 1;
    c[b.degree] -= Rational(b.coefficient);
  }
  return RationalPolynomial(std::move(c));
}

Decomposition decompose(const std::vector<BigInt>& ascending) {
  std::vector<BigInt> c = ascending;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw Error(ErrorCode::InvalidArgument, "cannot decompose the zero polynomial");
  if (c.back() < 0) throw Error(ErrorCode::NegativeLeadingCoefficient, "decompose needs a positive leading coefficient");
  Decomposition dec;
  BigInt widest = 0;
  for (std::size_t j = 0; j + 1 < c.size(); ++j) {
    if (c[j] < 0) {
      dec.borrows.push_back({j, -c[j]});
      widest = std::max(widest, BigInt(-c[j]));
      c[j] = 0;
      c[j + 1] -= 1;
    }
  }
  if (c.back() < 0) throw Error(ErrorCode::InfeasibleDecomposition, "borrowing exhausted the leading coefficient");
  dec.plain = std::move(c);
  dec.alpha = std::max<std::size_t>(2, small(widest, "borrow coefficient"));
  return dec;
}

Dfa assemble(const Decomposition& dec, LetterAllocator& fresh) {
  std::vector<Dfa> parts;
  for (const auto& b : dec.borrows)
    parts.push_back(lemma_language(b.degree + 1, small(b.coefficient, "borrow coefficient"), fresh));
  for (std::size_t l = dec.plain.size(); l-- > 1;) {
    std::size_t copies = small(dec.plain[l], "coefficient");
    for (std::size_t i = 0; i < copies; ++i) parts.push_back(build_power(l, fresh));
  }
  if (!dec.plain.empty() && dec.plain[0] > 0) parts.push_back(build_const(small(dec.plain[0], "constant term"), fresh));
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "decomposition has no terms");
  return minimize(disjoint_union(parts));
}

Dfa adjust_prefix(const Dfa& d, std::size_t alpha, const BigInt& target, LetterAllocator& fresh) {
  if (alpha == 0) throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
  if (target < 0) throw Error(ErrorCode::InvalidArgument, "negative target");
  CountTable table(d);
  const BigInt current = table.cumulative(alpha);
  if (current == target) return d;
  if (current > target) {
    // Remove the words of rank in [target, current): everything from the
    // word of rank `target` up to the end of length alpha − 1.
    const Word first_removed = unrank(table, target);
    const OrderedAlphabet& sigma = d.alphabet();
    Dfa doomed = at_least(sigma, first_removed);
    if (first_removed.size() + 1 <= alpha - 1)
      doomed = product(doomed, length_window(sigma, first_removed.size() + 1, alpha - 1), ProductMode::Union);
    return minimize(product(d, doomed, ProductMode::Difference));
  }
  if (alpha < 2) throw Error(ErrorCode::CannotAdjust, "cannot add words below length 1");
  const std::size_t missing = small(target - current, "number of added words");
  const std::string pad = d.alphabet().token(0);
  std::vector<TokenWord> add;
  add.reserve(missing);
  for (std::size_t i = 0; i < missing; ++i) {
    TokenWord w{fresh.next()};
    w.insert(w.end(), alpha - 2, pad);
    add.push_back(std::move(w));
  }
  return minimize(modify_finite(d, add, {}));
}

Dfa build_recognizer(const NumerationSystem& system, const RationalPolynomial& p, std::size_t alpha,
                     std::vector<ExceptionalWord>* exceptional) {
  const Dfa& lang = system.language();
  Dfa main = restrict_min_length(min_words(lang), alpha);
  CountTable table(lang);
  std::vector<Word> words;
  for (std::size_t t = 0; t < alpha; ++t) {
    BigInt value = p.integer_at(t);
    Word w = unrank(table, value);
    if (exceptional) exceptional->push_back({value, w});
    words.push_back(std::move(w));
  }
  if (words.empty()) return main;
  return minimize(product(main, finite_language(lang.alphabet(), words), ProductMode::Union));
}

SystemBundle build_system(const RationalPolynomial& p, const BuildOptions& options) {
  validate(p);
  LetterAllocator fresh;
  if (p.is_constant()) {
    // c0* with the single word c0^d.
    const BigInt d = p.integer_at(0);
    Dfa chain(OrderedAlphabet({fresh.next()}), 1);
    chain.set_final(0);
    chain.set_transition(0, 0, 0);
    Word w(small(d, "constant"), 0);
    Dfa rec = finite_language(chain.alphabet(), {w});
    return SystemBundle{p, NumerationSystem(chain), rec, 1, 1, {{d, w}}, chain};
  }

  ScaledPolynomial scaled = scale_to_integers(p);
  const RationalPolynomial integral = RationalPolynomial::from_integers(scaled.coefficients);
  const RationalPolynomial q = difference(integral);
  std::vector<BigInt> q_coeffs;
  for (const auto& c : q.coefficients()) q_coeffs.push_back(numerator(c));
  const Decomposition dec = decompose(q_coeffs);
  const std::size_t alpha = dec.alpha;

  Dfa lang = assemble(dec, fresh);
  lang = adjust_prefix(lang, alpha, scaled.scale * p.integer_at(alpha), fresh);
  Dfa undecimated = lang;
  if (scaled.scale > 1) {
    if (scaled.scale > BigInt(UINT32_MAX)) throw Error(ErrorCode::ResourceLimit, "scale does not fit the decimation automaton");
    lang = decimate(NumerationSystem(lang), scaled.scale.convert_to<std::uint32_t>(), 0, options.state_budget);
  }
  NumerationSystem system(lang);
  std::vector<ExceptionalWord> exceptional;
  Dfa recognizer = build_recognizer(system, p, alpha, &exceptional);
  return SystemBundle{p, std::move(system), std::move(recognizer), alpha, scaled.scale, std::move(exceptional),
                      std::move(undecimated)};
}

bool reorder_check(const SystemBundle& bundle, const std::vector<std::string>& order, std::size_t word_bound,
                   const BuildOptions& options) {
  const OrderedAlphabet sigma(order);
  Dfa lang = with_alphabet(bundle.undecimated, sigma);
  if (bundle.scale > 1)
    lang = decimate(NumerationSystem(lang), bundle.scale.convert_to<std::uint32_t>(), 0, options.state_budget);
  NumerationSystem system(lang);
  Dfa recognizer = build_recognizer(system, bundle.polynomial, bundle.alpha);

  // Consecutive non-empty lengths of a trim automaton differ by at most its state count.
  oracle::Budget budget{std::max<std::size_t>(word_bound, 1), (word_bound + 1) * system.language().state_count()};
  oracle::EnumerationCursor cursor(system.language(), budget);
  const std::set<BigInt> image = image_up_to(bundle.polynomial, BigInt(word_bound));
  Word w;
  for (std::size_t index = 0; index < word_bound && cursor.next(w); ++index) {
    bool in_image = image.count(BigInt(index)) != 0;
    if (accepts(recognizer, w) != in_image) return false;
  }
  return true;
}

}  // namespace polyrec
