#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "polyrec/automaton.hpp"
#include "polyrec/pipeline.hpp"
#include "polyrec/polynomial.hpp"

namespace polyrec {

// Coefficient list ("1/3,-2,37/6,-17/2,4", highest degree first) or an
// expression such as "1/3*x^4 - 2*x^3 + 37/6*x^2 - 17/2*x + 4".
// Throws SyntaxError (witness = 0-based position) or ZeroDenominator.
RationalPolynomial parse_polynomial(std::string_view text);

// Text DFA format:
//   alphabet <tok> ...
//   states <N>
//   initial <q>
//   final <q> ...
//   trans <q> <tok> <q'>
// '#' lines are comments. The writer renumbers states in BFS order from the
// initial state and drops unreachable ones.
Dfa read_dfa(std::istream& in);
Dfa read_dfa(const std::filesystem::path& path);
void write_dfa(std::ostream& out, const Dfa& d);
void write_dfa(const std::filesystem::path& path, const Dfa& d);

struct Manifest {
  RationalPolynomial polynomial;
  BigInt scale = 1;
  std::size_t alpha = 0;
  std::string system_file = "system.dfa";
  std::string recognizer_file = "recognizer.dfa";
  std::vector<std::pair<BigInt, TokenWord>> exceptional;
};

void write_manifest(std::ostream& out, const Manifest& m);
Manifest read_manifest(std::istream& in);

// Writes system.dfa, recognizer.dfa and manifest.txt into `dir`.
void save_bundle(const std::filesystem::path& dir, const SystemBundle& bundle);

struct LoadedBundle {
  Manifest manifest;
  Dfa system;
  Dfa recognizer;
};
LoadedBundle load_bundle(const std::filesystem::path& dir);

}  // namespace polyrec
