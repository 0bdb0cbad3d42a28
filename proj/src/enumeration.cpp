#include "polyrec/enumeration.hpp"

#include <algorithm>
#include <cstring>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "hash.hpp"
#include "polyrec/error.hpp"

namespace polyrec {

CountTable::CountTable(const Dfa& d) : dfa_(&d) {
  std::vector<BigInt> base(d.state_count());
  for (std::size_t q = 0; q < d.state_count(); ++q) base[q] = d.is_final(static_cast<StateId>(q)) ? 1 : 0;
  u_.push_back(std::move(base));
  v_.push_back(0);
}

void CountTable::extend_to(std::size_t length) {
  const Dfa& d = *dfa_;
  while (u_.size() <= length) {
    const auto& prev = u_.back();
    std::vector<BigInt> row(d.state_count());
    for (std::size_t q = 0; q < d.state_count(); ++q) {
      BigInt sum = 0;
      for (Symbol s = 0; s < d.letter_count(); ++s)
        if (StateId t = d.next(static_cast<StateId>(q), s); t != kNoState) sum += prev[t];
      row[q] = std::move(sum);
    }
    u_.push_back(std::move(row));
  }
}

const BigInt& CountTable::u(StateId q, std::size_t length) {
  extend_to(length);
  return u_[length][q];
}

const BigInt& CountTable::cumulative(std::size_t length) {
  while (v_.size() <= length) {
    std::size_t n = v_.size() - 1;
    v_.push_back(v_.back() + density(n));
  }
  return v_[length];
}

NumerationSystem::NumerationSystem(Dfa d) : dfa_(trim(d)) {
  if (!is_infinite(dfa_)) throw Error(ErrorCode::FiniteLanguage, "a numeration system needs an infinite language");
}

BigInt density(const Dfa& d, std::size_t length) {
  CountTable t(d);
  return t.density(length);
}

BigInt count_words_up_to(const Dfa& d, std::size_t max_length) {
  CountTable t(d);
  return t.cumulative(max_length + 1);
}

BigInt rank(CountTable& table, const Word& w) {
  const Dfa& d = table.dfa();
  if (!accepts(d, w)) throw Error(ErrorCode::NotInLanguage, "word is not in the language");
  BigInt r = table.cumulative(w.size());
  StateId q = d.initial();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t rest = w.size() - i - 1;
    for (Symbol tau = 0; tau < w[i]; ++tau)
      if (StateId t = d.next(q, tau); t != kNoState) r += table.u(t, rest);
    q = d.next(q, w[i]);
  }
  return r;
}

BigInt rank(const NumerationSystem& s, const Word& w) {
  CountTable t(s.language());
  return rank(t, w);
}

Word unrank(CountTable& table, const BigInt& n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative value");
  const Dfa& d = table.dfa();
  std::size_t length = 0;
  while (table.cumulative(length + 1) <= n) ++length;
  BigInt remaining = n - table.cumulative(length);
  Word w;
  StateId q = d.initial();
  for (std::size_t i = 0; i < length; ++i) {
    const std::size_t rest = length - i - 1;
    bool chosen = false;
    for (Symbol tau = 0; tau < d.letter_count(); ++tau) {
      StateId t = d.next(q, tau);
      if (t == kNoState) continue;
      const BigInt& c = table.u(t, rest);
      if (remaining < c) {
        w.push_back(tau);
        q = t;
        chosen = true;
        break;
      }
      remaining -= c;
    }
    if (!chosen) throw Error(ErrorCode::InvalidArgument, "count table inconsistent during unrank");
  }
  return w;
}

Word unrank(const NumerationSystem& s, const BigInt& n) {
  CountTable t(s.language());
  return unrank(t, n);
}

// Product state (q, S): q follows the word, S holds the states reached by
// strictly smaller words of the same length.
namespace {

// (q, S) construction with S kept as an explicit sorted state set.
Dfa min_words_subsets(const Dfa& d) {
  const std::size_t k = d.letter_count();
  std::unordered_map<std::vector<StateId>, StateId, VectorHash> ids;
  std::vector<std::vector<StateId>> states;
  auto intern = [&](std::vector<StateId> key) {
    auto [it, fresh] = ids.emplace(key, static_cast<StateId>(states.size()));
    if (fresh) states.push_back(std::move(key));
    return it->second;
  };
  intern({d.initial()});
  std::vector<StateId> table;
  std::vector<char> mark(d.state_count(), 0);
  for (std::size_t i = 0; i < states.size(); ++i) {
    const StateId q = states[i][0];
    std::vector<StateId> base;
    for (std::size_t j = 1; j < states[i].size(); ++j)
      for (Symbol s = 0; s < k; ++s)
        if (StateId t = d.next(states[i][j], s); t != kNoState && !mark[t]) {
          mark[t] = 1;
          base.push_back(t);
        }
    for (Symbol s = 0; s < k; ++s) {
      StateId qn = d.next(q, s);
      if (qn != kNoState) {
        std::vector<StateId> set = base;
        std::sort(set.begin(), set.end());
        set.insert(set.begin(), qn);
        table.push_back(intern(std::move(set)));
        if (!mark[qn]) {  // qn now belongs to the smaller-word set for larger letters
          mark[qn] = 1;
          base.push_back(qn);
        }
      } else {
        table.push_back(kNoState);
      }
    }
    for (StateId t : base) mark[t] = 0;
  }
  Dfa out(d.alphabet(), states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& key = states[i];
    bool fin = d.is_final(key[0]) &&
               std::none_of(key.begin() + 1, key.end(), [&](StateId p) { return d.is_final(p); });
    out.set_final(static_cast<StateId>(i), fin);
    for (Symbol s = 0; s < k; ++s)
      if (StateId t = table[i * k + s]; t != kNoState) out.set_transition(static_cast<StateId>(i), s, t);
  }
  return minimize(out);
}

// Length profile of a trimmed Dfa: Z_r = {p : p accepts some word of length
// r}. The sequence is ultimately periodic; Z_r = Z_{r + period} for r ≥ start.
struct LengthProfile {
  std::size_t start = 0;
  std::size_t period = 0;
  std::vector<std::vector<char>> rows;  // Z_0 .. Z_{start + period − 1}
};

std::optional<LengthProfile> length_profile(const Dfa& d, std::size_t limit) {
  const std::size_t n = d.state_count();
  std::unordered_map<std::vector<char>, std::size_t, VectorHash> seen;
  LengthProfile lp;
  std::vector<char> z(n);
  for (std::size_t q = 0; q < n; ++q) z[q] = d.is_final(static_cast<StateId>(q)) ? 1 : 0;
  for (;;) {
    auto [it, fresh] = seen.emplace(z, lp.rows.size());
    if (!fresh) {
      lp.start = it->second;
      lp.period = lp.rows.size() - lp.start;
      return lp;
    }
    if (lp.rows.size() >= limit) return std::nullopt;
    lp.rows.push_back(z);
    std::vector<char> next(n, 0);
    for (std::size_t q = 0; q < n; ++q)
      for (Symbol s = 0; s < d.letter_count() && !next[q]; ++s)
        if (StateId t = d.next(static_cast<StateId>(q), s); t != kNoState && z[t]) next[q] = 1;
    z = std::move(next);
  }
}

constexpr std::size_t kProfileLimit = 1 << 14;

}  // namespace

// The set S of states reached by smaller words of the same length only
// matters through the lengths it can still complete, and it advances on every
// letter. So S is stored as the bitset {r < |rows| : Z_r ∩ S ≠ ∅}, shifted by
// one per letter with the periodic tail folded back in.
Dfa min_words(const Dfa& input) {
  Dfa d = trim(input);
  auto profile = length_profile(d, kProfileLimit);
  if (!profile) return min_words_subsets(d);
  const std::size_t n = d.state_count(), k = d.letter_count();
  const std::size_t bits = profile->rows.size(), words = (bits + 63) / 64;
  std::vector<std::vector<std::uint64_t>> column(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < bits; ++r)
    for (std::size_t q = 0; q < n; ++q)
      if (profile->rows[r][q]) column[q][r / 64] |= std::uint64_t{1} << (r % 64);
  auto bit = [](const std::vector<std::uint64_t>& v, std::size_t r) { return (v[r / 64] >> (r % 64)) & 1; };

  // Key: [q, bitset words...].
  std::unordered_map<std::vector<std::uint64_t>, StateId, VectorHash> ids;
  std::vector<std::vector<std::uint64_t>> states;
  auto intern = [&](std::vector<std::uint64_t> key) {
    auto [it, fresh] = ids.emplace(key, static_cast<StateId>(states.size()));
    if (fresh) states.push_back(std::move(key));
    return it->second;
  };
  {
    std::vector<std::uint64_t> key(words + 1, 0);
    key[0] = static_cast<std::uint64_t>(d.initial());
    intern(std::move(key));
  }
  std::vector<StateId> table;
  std::vector<std::uint64_t> shifted(words);
  for (std::size_t i = 0; i < states.size(); ++i) {
    const StateId q = static_cast<StateId>(states[i][0]);
    std::vector<std::uint64_t> cur(states[i].begin() + 1, states[i].end());
    // shifted[r] = cur[r + 1]; the last row wraps to the start of the period.
    std::fill(shifted.begin(), shifted.end(), 0);
    for (std::size_t w = 0; w < words; ++w) {
      shifted[w] = cur[w] >> 1;
      if (w + 1 < words) shifted[w] |= cur[w + 1] << 63;
    }
    if (bit(cur, profile->start)) shifted[(bits - 1) / 64] |= std::uint64_t{1} << ((bits - 1) % 64);
    for (Symbol s = 0; s < k; ++s) {
      StateId qn = d.next(q, s);
      if (qn == kNoState) {
        table.push_back(kNoState);
        continue;
      }
      std::vector<std::uint64_t> key(words + 1);
      key[0] = static_cast<std::uint64_t>(qn);
      std::copy(shifted.begin(), shifted.end(), key.begin() + 1);
      table.push_back(intern(std::move(key)));
      for (std::size_t w = 0; w < words; ++w) shifted[w] |= column[qn][w];
    }
  }
  Dfa out(d.alphabet(), states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const bool smaller_ends_here = (states[i][1] & 1) != 0;
    out.set_final(static_cast<StateId>(i), d.is_final(static_cast<StateId>(states[i][0])) && !smaller_ends_here);
    for (Symbol s = 0; s < k; ++s)
      if (StateId t = table[i * k + s]; t != kNoState) out.set_transition(static_cast<StateId>(i), s, t);
  }
  return minimize(out);
}

Dfa strip_first(const Dfa& d, std::size_t count) {
  Dfa cur = minimize(d);
  for (std::size_t i = 0; i < count; ++i) cur = minimize(product(cur, min_words(cur), ProductMode::Difference));
  return cur;
}

namespace {

// Records in one flat buffer, deduplicated through a hash set of
// record indices.
class RecordStore {
 public:
  RecordStore() : ids_(16, Hash{this}, Eq{this}) { offsets_.push_back(0); }

  std::size_t size() const noexcept { return offsets_.size() - 1; }
  const std::uint32_t* get(std::size_t id) const { return data_.data() + offsets_[id]; }
  std::size_t length(std::size_t id) const { return offsets_[id + 1] - offsets_[id]; }

  // Returns (id, inserted).
  std::pair<std::size_t, bool> intern(const std::vector<std::uint32_t>& rec) {
    data_.insert(data_.end(), rec.begin(), rec.end());
    offsets_.push_back(data_.size());
    auto [it, fresh] = ids_.insert(size() - 1);
    if (fresh) return {size() - 1, true};
    offsets_.pop_back();
    data_.resize(offsets_.back());
    return {*it, false};
  }

 private:
  struct Hash {
    const RecordStore* self;
    std::size_t operator()(std::size_t id) const {
      const std::uint32_t* p = self->get(id);
      std::size_t len = self->length(id), h = len;
      for (std::size_t i = 0; i < len; ++i) h = hash_mix(h, p[i]);
      return h;
    }
  };
  struct Eq {
    const RecordStore* self;
    bool operator()(std::size_t a, std::size_t b) const {
      std::size_t len = self->length(a);
      return len == self->length(b) && std::memcmp(self->get(a), self->get(b), len * sizeof(std::uint32_t)) == 0;
    }
  };

  std::vector<std::uint32_t> data_;
  std::vector<std::size_t> offsets_;
  std::unordered_set<std::size_t, Hash, Eq> ids_;
};

}  // namespace

// Forward value automaton. For w = p z with |z| = r and q = δ(init, p),
//   rank(w) = v(r) + <a_p, u(r)> + #{y < z : |y| = r, y ∈ L_q}
// where u(r) is the column (u_t(r))_t and a_p is a row vector over Z_m with
//   a_ε = 0,   a_{pσ} = a_p A + e_init + Σ_{τ<σ} e_{δ(q,τ)},
// A being the transition count matrix. At the end of the word r = 0, so w is
// kept iff q is final and <a_p, u(0)> ≡ residue. States are (q, a_p).
//
// a_p only acts through the values <a_p, u(r)> mod m, and u(r) mod m runs
// through an ultimately periodic sequence of phases U_0, U_1, ... . When the
// sequence has fewer phases than the automaton has states, a state stores
// c(φ) = <a_p, U_φ> instead, which updates as
//   c'(φ) = c(next(φ)) + U_φ(init) + Σ_{τ<σ} U_φ(δ(q,τ)).
Dfa decimate(const NumerationSystem& sys, std::uint32_t modulus, std::uint32_t residue, std::size_t state_budget) {
  if (modulus == 0 || residue >= modulus) throw Error(ErrorCode::InvalidArgument, "need 0 <= residue < modulus");
  const Dfa d = minimize(sys.language());
  if (modulus == 1) return d;
  const std::size_t n = d.state_count();
  const std::size_t k = d.letter_count();
  const StateId init = d.initial();
  const std::uint64_t m = modulus;

  // Phases of u(r) mod m, stopped once there are more than n of them.
  RecordStore phase_ids;
  std::vector<std::size_t> phase_next;
  {
    std::vector<std::uint32_t> u(n);
    for (std::size_t q = 0; q < n; ++q) u[q] = d.is_final(static_cast<StateId>(q)) ? 1 : 0;
    std::size_t prev = SIZE_MAX;
    for (;;) {
      auto [id, fresh] = phase_ids.intern(u);
      if (prev != SIZE_MAX) phase_next[prev] = id;
      if (!fresh || phase_ids.size() > n) break;
      phase_next.push_back(SIZE_MAX);
      prev = id;
      std::vector<std::uint32_t> next(n, 0);
      for (std::size_t q = 0; q < n; ++q) {
        std::uint64_t sum = 0;
        for (Symbol s = 0; s < k; ++s)
          if (StateId t = d.next(static_cast<StateId>(q), s); t != kNoState) sum += u[t];
        next[q] = static_cast<std::uint32_t>(sum % m);
      }
      u = std::move(next);
    }
  }
  const bool by_phase = phase_ids.size() <= n;
  const std::size_t width = by_phase ? phase_ids.size() : n;

  // Records: [q, value_0, ..., value_{width-1}].
  RecordStore states;
  {
    std::vector<std::uint32_t> rec(width + 1, 0);
    rec[0] = static_cast<std::uint32_t>(init);
    states.intern(rec);
  }
  std::vector<StateId> table;
  std::vector<std::uint64_t> base(width), prefix(width);
  std::vector<std::uint32_t> rec(width + 1);
  for (std::size_t i = 0; i < states.size(); ++i) {
    const StateId q = static_cast<StateId>(states.get(i)[0]);
    {
      const std::uint32_t* cur = states.get(i) + 1;
      if (by_phase) {
        for (std::size_t f = 0; f < width; ++f) base[f] = cur[phase_next[f]] + phase_ids.get(f)[init];
      } else {
        std::fill(base.begin(), base.end(), 0);
        for (std::size_t p = 0; p < n; ++p)
          if (cur[p] != 0)
            for (Symbol s = 0; s < k; ++s)
              if (StateId t = d.next(static_cast<StateId>(p), s); t != kNoState) base[t] += cur[p];
        base[init] += 1;
      }
    }
    std::fill(prefix.begin(), prefix.end(), 0);
    for (Symbol sigma = 0; sigma < k; ++sigma) {
      const StateId t = d.next(q, sigma);
      if (t == kNoState) {
        table.push_back(kNoState);
        continue;
      }
      rec[0] = static_cast<std::uint32_t>(t);
      for (std::size_t f = 0; f < width; ++f) rec[f + 1] = static_cast<std::uint32_t>((base[f] + prefix[f]) % m);
      auto [id, fresh] = states.intern(rec);
      if (fresh && states.size() > state_budget)
        throw Error(ErrorCode::ResourceLimit, "decimation exceeded the state budget of " + std::to_string(state_budget));
      table.push_back(static_cast<StateId>(id));
      if (by_phase)
        for (std::size_t f = 0; f < width; ++f) prefix[f] += phase_ids.get(f)[t];
      else
        prefix[t] += 1;
    }
  }

  Dfa out(d.alphabet(), states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::uint32_t* cur = states.get(i);
    const StateId q = static_cast<StateId>(cur[0]);
    if (d.is_final(q)) {
      std::uint64_t value = 0;
      if (by_phase) {
        value = cur[1];
      } else {
        for (std::size_t p = 0; p < n; ++p)
          if (d.is_final(static_cast<StateId>(p))) value += cur[p + 1];
      }
      out.set_final(static_cast<StateId>(i), value % m == residue);
    }
    for (Symbol s = 0; s < k; ++s)
      if (StateId t = table[i * k + s]; t != kNoState) out.set_transition(static_cast<StateId>(i), s, t);
  }
  return minimize(out);
}

}  // namespace polyrec
