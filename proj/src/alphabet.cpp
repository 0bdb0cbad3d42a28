#include "polyrec/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "polyrec/error.hpp"

namespace polyrec {

OrderedAlphabet::OrderedAlphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  index_.reserve(tokens_.size());
  for (Symbol i = 0; i < tokens_.size(); ++i) {
    const auto& t = tokens_[i];
    if (t.empty() || std::any_of(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }))
      throw Error(ErrorCode::InvalidArgument, "letter token must be non-empty without whitespace");
    if (!index_.emplace(t, i).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate letter token '" + t + "'");
  }
}

bool OrderedAlphabet::contains(std::string_view token) const {
  return index_.find(std::string(token)) != index_.end();
}

Symbol OrderedAlphabet::index_of(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) throw Error(ErrorCode::UnknownLetter, "letter '" + std::string(token) + "'");
  return it->second;
}

Word OrderedAlphabet::encode(const TokenWord& word) const {
  Word out;
  out.reserve(word.size());
  for (const auto& t : word) out.push_back(index_of(t));
  return out;
}

TokenWord OrderedAlphabet::decode(const Word& word) const {
  TokenWord out;
  out.reserve(word.size());
  for (Symbol s : word) out.push_back(token(s));
  return out;
}

bool OrderedAlphabet::same_tokens(const OrderedAlphabet& other) const {
  if (size() != other.size()) return false;
  return std::all_of(tokens_.begin(), tokens_.end(), [&](const std::string& t) { return other.contains(t); });
}

OrderedAlphabet OrderedAlphabet::merged_with(const OrderedAlphabet& other) const {
  auto tokens = tokens_;
  for (const auto& t : other.tokens_)
    if (!contains(t)) tokens.push_back(t);
  return OrderedAlphabet(std::move(tokens));
}

std::vector<std::string> LetterAllocator::take(std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(next());
  return out;
}

std::string format_word(const TokenWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += word[i];
  }
  return out;
}

TokenWord split_word(std::string_view text) {
  TokenWord out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

TokenWord parse_word(std::string_view text, const OrderedAlphabet& alphabet) {
  auto tokens = split_word(text);
  bool single_chars = std::all_of(alphabet.tokens().begin(), alphabet.tokens().end(),
                                  [](const std::string& t) { return t.size() == 1; });
  if (tokens.size() == 1 && single_chars && tokens[0].size() > 1) {
    TokenWord out;
    for (char c : tokens[0]) out.emplace_back(1, c);
    return out;
  }
  return tokens;
}

}  // namespace polyrec
