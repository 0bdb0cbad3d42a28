#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace polyrec {

// Index of a letter inside its OrderedAlphabet; the index is also its rank
// in the alphabet order.
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;
using TokenWord = std::vector<std::string>;

// Finite, totally ordered alphabet. The order is the declaration order, not
// the textual order of the tokens.
class OrderedAlphabet {
 public:
  OrderedAlphabet() = default;
  explicit OrderedAlphabet(std::vector<std::string> tokens);

  std::size_t size() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }
  const std::string& token(Symbol s) const { return tokens_.at(s); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }

  bool contains(std::string_view token) const;
  // Throws UnknownLetter.
  Symbol index_of(std::string_view token) const;

  Word encode(const TokenWord& word) const;
  TokenWord decode(const Word& word) const;

  // True when both alphabets hold the same tokens, in any order.
  bool same_tokens(const OrderedAlphabet& other) const;

  // Letters of `other` that are not already present are appended, in
  // `other`'s order.
  OrderedAlphabet merged_with(const OrderedAlphabet& other) const;

  friend bool operator==(const OrderedAlphabet& a, const OrderedAlphabet& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Symbol> index_;
};

// Issues "c0", "c1", ... in order. One allocator per construction session.
class LetterAllocator {
 public:
  explicit LetterAllocator(std::string prefix = "c") : prefix_(std::move(prefix)) {}

  std::string next() { return prefix_ + std::to_string(counter_++); }
  std::vector<std::string> take(std::size_t count);
  std::uint64_t issued() const noexcept { return counter_; }

 private:
  std::string prefix_;
  std::uint64_t counter_ = 0;
};

// Words cross text boundaries as space-separated tokens.
std::string format_word(const TokenWord& word);
TokenWord split_word(std::string_view text);
// Accepts space-separated tokens, or a single run of single-character
// tokens when every token of `alphabet` is one character long.
TokenWord parse_word(std::string_view text, const OrderedAlphabet& alphabet);

}  // namespace polyrec
