#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "doctest.h"
#include "polyrec/automata.hpp"
#include "polyrec/constructors.hpp"
#include "polyrec/error.hpp"
#include "polyrec/io.hpp"
#include "polyrec/pipeline.hpp"
#include "test_util.hpp"

using namespace polyrec;
using namespace testutil;
namespace fs = std::filesystem;

namespace {

ErrorCode code_of(const std::function<void()>& f, std::optional<long long>* witness = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (witness) *witness = e.witness();
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

Dfa read_text(const std::string& text) {
  std::istringstream in(text);
  return read_dfa(in);
}

std::string write_text(const Dfa& d) {
  std::ostringstream out;
  write_dfa(out, d);
  return out.str();
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("polyrec_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("parse_polynomial") {
  RationalPolynomial p4({Rational(4), Rational(-17, 2), Rational(37, 6), Rational(-2), Rational(1, 3)});
  CHECK(parse_polynomial("1/3,-2,37/6,-17/2,4") == p4);
  CHECK(parse_polynomial("1/3*x^4 - 2*x^3 + 37/6*x^2 - 17/2*x + 4") == p4);
  CHECK(parse_polynomial("x^4/3 - 2x^3 + 37/6 x^2 - 17/2 x + 4") == p4);
  CHECK(parse_polynomial("2*x^2+3*x") == parse_polynomial("2,3,0"));
  CHECK(parse_polynomial("(x-2)^2") == parse_polynomial("1,-4,4"));
  CHECK(parse_polynomial("x*(x+1)/2") == RationalPolynomial({Rational(0), Rational(1, 2), Rational(1, 2)}));
  CHECK(parse_polynomial("7") == RationalPolynomial::from_integers({BigInt(7)}));
  CHECK(parse_polynomial("2(x+1)") == parse_polynomial("2,2"));
  CHECK(parse_polynomial("-x^2 + x^2").is_zero());

  std::optional<long long> where;
  CHECK(code_of([] { parse_polynomial("2*x^"); }, &where) == ErrorCode::SyntaxError);
  CHECK(where.has_value());
  CHECK(code_of([] { parse_polynomial("x + $"); }, &where) == ErrorCode::SyntaxError);
  CHECK(where == 4);
  CHECK(code_of([] { parse_polynomial("1/0"); }) == ErrorCode::ZeroDenominator);
  CHECK(code_of([] { parse_polynomial("1,2/0"); }) == ErrorCode::ZeroDenominator);
  CHECK(code_of([] { parse_polynomial(""); }) == ErrorCode::SyntaxError);
}

TEST_CASE("coefficient list round trip") {
  for (const char* text : {"1/3*x^4 - 2*x^3 + 37/6*x^2 - 17/2*x + 4", "x^4-3x^2-2x+5", "0", "5", "x/2+x^2/2"}) {
    RationalPolynomial p = parse_polynomial(text);
    CHECK(parse_polynomial(p.to_coefficient_list()) == p);
    CHECK(parse_polynomial(p.to_expression()) == p);
  }
}

TEST_CASE("write_dfa canonical form") {
  CHECK(write_text(astar_bstar()) ==
        "alphabet a b\nstates 2\ninitial 0\nfinal 0 1\ntrans 0 a 0\ntrans 0 b 1\ntrans 1 b 1\n");
  // Renumbering is BFS from the initial state.
  Dfa shuffled = make_dfa({"a", "b"}, 3, 2, {2, 0}, {{2, "a", 2}, {2, "b", 0}, {0, "b", 0}});
  CHECK(write_text(shuffled) == write_text(astar_bstar()));
  CHECK(write_text(read_text(write_text(intro_system()))) == write_text(intro_system()));
}

TEST_CASE("read_dfa round trip") {
  LetterAllocator fresh;
  Dfa l2 = build_power(2, fresh);
  Dfa back = read_text(write_text(l2));
  CHECK(equivalent(l2, back).equal);
  CHECK(back.alphabet() == l2.alphabet());
}

TEST_CASE("read_dfa errors") {
  const std::string head = "alphabet a b\nstates 2\ninitial 0\nfinal 1\n";
  std::optional<long long> line;
  CHECK(code_of([&] { read_text(head + "trans 0 z 1\n"); }, &line) == ErrorCode::FormatError);
  CHECK(line == 5);
  CHECK(code_of([&] { read_text(head + "trans 0 a 1\ntrans 0 a 0\n"); }, &line) == ErrorCode::DuplicateTransition);
  CHECK(line == 6);
  CHECK(code_of([&] { read_text(head + "trans 0 a 7\n"); }) == ErrorCode::UnknownState);
  CHECK(code_of([&] { read_text("alphabet a b\nstates 2\ninitial 5\n"); }) == ErrorCode::UnknownState);
  CHECK(code_of([&] { read_text("states 2\ninitial 0\n"); }) == ErrorCode::FormatError);
  CHECK(code_of([&] { read_text("alphabet a a\nstates 1\ninitial 0\n"); }) == ErrorCode::FormatError);
  CHECK(code_of([&] { read_text(head + "bogus 1\n"); }) == ErrorCode::FormatError);
  CHECK_NOTHROW(read_text("# comment\n" + head + "\ntrans 0 a 1\n"));
}

TEST_CASE("manifest round trip") {
  Manifest m;
  m.polynomial = parse_polynomial("x^4-3x^2-2x+5");
  m.scale = 1;
  m.alpha = 4;
  m.exceptional = {{BigInt(1), {"c0"}}, {BigInt(5), {"c0", "c1"}}};
  std::stringstream io;
  write_manifest(io, m);
  Manifest back = read_manifest(io);
  CHECK(back.polynomial == m.polynomial);
  CHECK(back.scale == 1);
  CHECK(back.alpha == 4);
  CHECK(back.system_file == "system.dfa");
  CHECK(back.exceptional == m.exceptional);

  std::istringstream bad("polynomial 1,2\nalpha x\n");
  CHECK(code_of([&] { read_manifest(bad); }) == ErrorCode::FormatError);
}

TEST_CASE("bundle save and load") {
  SystemBundle b = build_system(parse_polynomial("2*x^2+3*x"));
  fs::path dir = scratch("bundle");
  save_bundle(dir, b);
  CHECK(fs::exists(dir / "system.dfa"));
  CHECK(fs::exists(dir / "recognizer.dfa"));
  CHECK(fs::exists(dir / "manifest.txt"));
  LoadedBundle l = load_bundle(dir);
  CHECK(equivalent(l.system, b.system.language()).equal);
  CHECK(equivalent(l.recognizer, b.recognizer).equal);
  CHECK(l.manifest.polynomial == b.polynomial);
  CHECK(l.manifest.alpha == b.alpha);
  CHECK(l.manifest.exceptional.size() == b.exceptional.size());

  // Saving twice produces identical bytes.
  fs::path again = scratch("bundle2");
  save_bundle(again, b);
  for (const char* f : {"system.dfa", "recognizer.dfa", "manifest.txt"}) {
    std::ifstream x(dir / f), y(again / f);
    std::stringstream sx, sy;
    sx << x.rdbuf();
    sy << y.rdbuf();
    CHECK(sx.str() == sy.str());
  }
  fs::remove_all(dir);
  fs::remove_all(again);
}

TEST_CASE("word parsing") {
  OrderedAlphabet abc({"a", "b", "c"});
  CHECK(parse_word("abc", abc) == TokenWord{"a", "b", "c"});
  CHECK(parse_word("a b c", abc) == TokenWord{"a", "b", "c"});
  CHECK(parse_word("", abc).empty());
  OrderedAlphabet long_tokens({"c0", "c1"});
  CHECK(parse_word("c0 c1", long_tokens) == TokenWord{"c0", "c1"});
  CHECK(format_word({"c0", "c1"}) == "c0 c1");
}
