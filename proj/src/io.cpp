#include "polyrec/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "polyrec/automata.hpp"
#include "polyrec/error.hpp"

namespace polyrec {

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  // expr   := ['+'|'-'] term (('+'|'-') term)*
  // term   := power (('*'|'/'| juxtaposition) power)*
  // power  := atom ['^' digits]
  // atom   := number | 'x' | '(' expr ')'
  // Division is only by non-zero constants.
  RationalPolynomial expression() {
    RationalPolynomial p = sum();
    skip();
    if (!at_end()) fail("unexpected character", pos_);
    return p;
  }

  RationalPolynomial coefficient_list() {
    std::vector<Rational> desc;
    for (;;) {
      skip();
      desc.push_back(rational(true));
      skip();
      if (at_end()) break;
      if (take() != ',') fail("expected ','", pos_ - 1);
    }
    return RationalPolynomial(std::vector<Rational>(desc.rbegin(), desc.rend()));
  }

 private:
  RationalPolynomial sum() {
    skip();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = take() == '-';
      skip();
    }
    RationalPolynomial acc = product();
    if (negative) acc = Rational(-1) * acc;
    for (;;) {
      skip();
      if (peek() != '+' && peek() != '-') return acc;
      bool minus = take() == '-';
      RationalPolynomial t = product();
      acc = minus ? acc - t : acc + t;
    }
  }

  RationalPolynomial product() {
    RationalPolynomial acc = power();
    for (;;) {
      skip();
      char c = peek();
      if (c == '*') {
        take();
        acc = acc * power();
      } else if (c == '/') {
        take();
        skip();
        std::size_t at = pos_;
        RationalPolynomial d = power();
        if (!d.is_constant()) fail("division by a non-constant", at);
        if (d.is_zero()) throw Error(ErrorCode::ZeroDenominator, "zero denominator", static_cast<long long>(at));
        acc = (1 / d.coefficient(0)) * acc;
      } else if (c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  RationalPolynomial power() {
    RationalPolynomial base = atom();
    skip();
    if (peek() != '^') return base;
    take();
    skip();
    std::size_t at = pos_;
    BigInt e = unsigned_int();
    if (e > 1000) fail("exponent too large", at);
    RationalPolynomial r = RationalPolynomial::from_integers({BigInt(1)});
    for (unsigned i = 0; i < e.convert_to<unsigned>(); ++i) r = r * base;
    return r;
  }

  RationalPolynomial atom() {
    skip();
    char c = peek();
    if (c == 'x') {
      take();
      return RationalPolynomial({Rational(0), Rational(1)});
    }
    if (c == '(') {
      take();
      RationalPolynomial inner = sum();
      skip();
      if (peek() != ')') fail("expected ')'", pos_);
      take();
      return inner;
    }
    return RationalPolynomial({Rational(unsigned_int())});
  }

  Rational rational(bool allow_sign) {
    bool negative = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      negative = take() == '-';
      skip();
    } else if (peek() == '-') {
      negative = true;
      take();
      skip();
    }
    BigInt num = unsigned_int();
    BigInt den = 1;
    skip();
    if (peek() == '/') {
      take();
      skip();
      std::size_t at = pos_;
      den = unsigned_int();
      if (den == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator", static_cast<long long>(at));
    }
    Rational r(num, den);
    return negative ? Rational(-r) : r;
  }

  BigInt unsigned_int() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number", start);
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(at), static_cast<long long>(at));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

[[noreturn]] void format_error(std::size_t line, const std::string& what, ErrorCode code = ErrorCode::FormatError) {
  throw Error(code, "line " + std::to_string(line) + ": " + what, static_cast<long long>(line));
}

std::string trim_copy(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

StateId parse_state(const std::string& tok, std::size_t states, std::size_t line) {
  std::size_t used = 0;
  long long v = -1;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    format_error(line, "bad state id '" + tok + "'");
  }
  if (used != tok.size()) format_error(line, "bad state id '" + tok + "'");
  if (v < 0 || static_cast<std::size_t>(v) >= states) format_error(line, "state " + tok + " out of range", ErrorCode::UnknownState);
  return static_cast<StateId>(v);
}

}  // namespace

RationalPolynomial parse_polynomial(std::string_view text) {
  PolyParser parser(text);
  if (text.find('x') != std::string_view::npos) return parser.expression();
  if (text.find(',') != std::string_view::npos) return parser.coefficient_list();
  return parser.expression();
}

Dfa read_dfa(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  std::optional<OrderedAlphabet> sigma;
  std::optional<std::size_t> states;
  std::optional<StateId> initial;
  std::vector<StateId> finals;
  bool have_final = false;
  struct Edge {
    StateId from;
    Symbol letter;
    StateId to;
    std::size_t line;
  };
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string body = trim_copy(raw);
    if (body.empty() || body[0] == '#') continue;
    TokenWord tok = split_word(body);
    const std::string& key = tok[0];
    if (key == "alphabet") {
      if (sigma) format_error(line, "repeated alphabet line");
      std::set<std::string> seen;
      for (std::size_t i = 1; i < tok.size(); ++i)
        if (!seen.insert(tok[i]).second) format_error(line, "duplicate alphabet token '" + tok[i] + "'");
      sigma = OrderedAlphabet(TokenWord(tok.begin() + 1, tok.end()));
    } else if (key == "states") {
      if (states || tok.size() != 2) format_error(line, "expected 'states <N>' once");
      try {
        std::size_t used = 0;
        long long n = std::stoll(tok[1], &used);
        if (used != tok[1].size() || n < 1) throw std::invalid_argument("count");
        states = static_cast<std::size_t>(n);
      } catch (const std::exception&) {
        format_error(line, "bad state count '" + tok[1] + "'");
      }
    } else if (key == "initial") {
      if (!states) format_error(line, "'initial' before 'states'");
      if (initial || tok.size() != 2) format_error(line, "expected 'initial <q>' once");
      initial = parse_state(tok[1], *states, line);
    } else if (key == "final") {
      if (!states) format_error(line, "'final' before 'states'");
      if (have_final) format_error(line, "repeated final line");
      have_final = true;
      for (std::size_t i = 1; i < tok.size(); ++i) finals.push_back(parse_state(tok[i], *states, line));
    } else if (key == "trans") {
      if (!states || !sigma) format_error(line, "'trans' before 'alphabet' and 'states'");
      if (tok.size() != 4) format_error(line, "expected 'trans <q> <tok> <q'>'");
      if (!sigma->contains(tok[2])) format_error(line, "letter '" + tok[2] + "' not in alphabet");
      edges.push_back({parse_state(tok[1], *states, line), sigma->index_of(tok[2]), parse_state(tok[3], *states, line), line});
    } else {
      format_error(line, "unknown directive '" + key + "'");
    }
  }
  if (!sigma) format_error(line, "missing alphabet line");
  if (!states) format_error(line, "missing states line");
  if (!initial) format_error(line, "missing initial line");
  Dfa d(*sigma, *states, *initial);
  for (StateId f : finals) d.set_final(f);
  for (const Edge& e : edges) {
    if (d.next(e.from, e.letter) != kNoState) format_error(e.line, "duplicate transition", ErrorCode::DuplicateTransition);
    d.set_transition(e.from, e.letter, e.to);
  }
  return d;
}

Dfa read_dfa(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FormatError, "cannot open " + path.string());
  return read_dfa(in);
}

void write_dfa(std::ostream& out, const Dfa& input) {
  // BFS renumbering, unreachable states dropped.
  std::vector<StateId> order{input.initial()};
  std::vector<StateId> id(input.state_count(), kNoState);
  id[input.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Symbol s = 0; s < input.letter_count(); ++s) {
      StateId t = input.next(order[i], s);
      if (t != kNoState && id[t] == kNoState) {
        id[t] = static_cast<StateId>(order.size());
        order.push_back(t);
      }
    }
  out << "alphabet";
  for (const auto& t : input.alphabet().tokens()) out << ' ' << t;
  out << "\nstates " << order.size() << "\ninitial 0\nfinal";
  for (std::size_t i = 0; i < order.size(); ++i)
    if (input.is_final(order[i])) out << ' ' << i;
  out << '\n';
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Symbol s = 0; s < input.letter_count(); ++s)
      if (StateId t = input.next(order[i], s); t != kNoState)
        out << "trans " << i << ' ' << input.alphabet().token(s) << ' ' << id[t] << '\n';
}

void write_dfa(const std::filesystem::path& path, const Dfa& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::FormatError, "cannot write " + path.string());
  write_dfa(out, d);
}

void write_manifest(std::ostream& out, const Manifest& m) {
  out << "polynomial: " << m.polynomial.to_coefficient_list() << '\n';
  out << "s: " << m.scale << '\n';
  out << "alpha: " << m.alpha << '\n';
  out << "system_file: " << m.system_file << '\n';
  out << "recognizer_file: " << m.recognizer_file << '\n';
  out << "exceptional: ";
  for (std::size_t i = 0; i < m.exceptional.size(); ++i) {
    if (i) out << ';';
    out << m.exceptional[i].first << '=' << format_word(m.exceptional[i].second);
  }
  out << '\n';
}

Manifest read_manifest(std::istream& in) {
  Manifest m;
  std::string raw;
  std::size_t line = 0;
  std::set<std::string> seen;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (trim_copy(raw).empty() || trim_copy(raw)[0] == '#') continue;
    auto colon = raw.find(':');
    if (colon == std::string::npos) format_error(line, "expected 'key: value'");
    std::string key = trim_copy(std::string_view(raw).substr(0, colon));
    std::string value = trim_copy(std::string_view(raw).substr(colon + 1));
    seen.insert(key);
    try {
      if (key == "polynomial") {
        m.polynomial = parse_polynomial(value);
      } else if (key == "s") {
        m.scale = BigInt(value);
      } else if (key == "alpha") {
        m.alpha = std::stoull(value);
      } else if (key == "system_file") {
        m.system_file = value;
      } else if (key == "recognizer_file") {
        m.recognizer_file = value;
      } else if (key == "exceptional") {
        std::size_t start = 0;
        while (start < value.size()) {
          std::size_t end = value.find(';', start);
          if (end == std::string::npos) end = value.size();
          std::string pair = value.substr(start, end - start);
          auto eq = pair.find('=');
          if (eq == std::string::npos) format_error(line, "expected 'value=word'");
          m.exceptional.emplace_back(BigInt(trim_copy(std::string_view(pair).substr(0, eq))),
                                     split_word(std::string_view(pair).substr(eq + 1)));
          start = end + 1;
        }
      } else {
        format_error(line, "unknown key '" + key + "'");
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      format_error(line, std::string("bad value: ") + e.what());
    }
  }
  for (const char* k : {"polynomial", "s", "alpha", "system_file", "recognizer_file"})
    if (!seen.count(k)) format_error(line, std::string("missing key '") + k + "'");
  return m;
}

void save_bundle(const std::filesystem::path& dir, const SystemBundle& bundle) {
  std::filesystem::create_directories(dir);
  Manifest m;
  m.polynomial = bundle.polynomial;
  m.scale = bundle.scale;
  m.alpha = bundle.alpha;
  for (const auto& e : bundle.exceptional)
    m.exceptional.emplace_back(e.value, bundle.system.alphabet().decode(e.word));
  write_dfa(dir / m.system_file, bundle.system.language());
  write_dfa(dir / m.recognizer_file, bundle.recognizer);
  std::ofstream out(dir / "manifest.txt", std::ios::binary);
  if (!out) throw Error(ErrorCode::FormatError, "cannot write manifest in " + dir.string());
  write_manifest(out, m);
}

LoadedBundle load_bundle(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.txt");
  if (!in) throw Error(ErrorCode::FormatError, "cannot open " + (dir / "manifest.txt").string());
  Manifest m = read_manifest(in);
  Dfa system = read_dfa(dir / m.system_file);
  Dfa recognizer = read_dfa(dir / m.recognizer_file);
  return {std::move(m), std::move(system), std::move(recognizer)};
}

}  // namespace polyrec
