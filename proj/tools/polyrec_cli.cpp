// Command-line front end: build numeration systems for polynomials, emit
// stock languages, convert between values and representations, verify.

#include <filesystem>
#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "polyrec/automata.hpp"
#include "polyrec/constructors.hpp"
#include "polyrec/enumeration.hpp"
#include "polyrec/error.hpp"
#include "polyrec/io.hpp"
#include "polyrec/oracle.hpp"
#include "polyrec/pipeline.hpp"

namespace fs = std::filesystem;
using namespace polyrec;

namespace {

Dfa load_system_dfa(const fs::path& where) {
  if (fs::is_directory(where)) {
    auto b = load_bundle(where);
    return std::move(b.system);
  }
  return read_dfa(where);
}

int cmd_build(const std::string& poly, const fs::path& out, std::size_t budget) {
  RationalPolynomial p = parse_polynomial(poly);
  SystemBundle bundle = build_system(p, BuildOptions{budget});
  save_bundle(out, bundle);
  std::cout << "alpha " << bundle.alpha << "\ns " << bundle.scale << "\nletters " << bundle.system.alphabet().size()
            << "\nsystem_states " << bundle.system.language().state_count() << "\nrecognizer_states "
            << bundle.recognizer.state_count() << '\n';
  return 0;
}

int cmd_lang(const std::string& kind, std::size_t k, std::size_t alpha, std::size_t c, const fs::path& out) {
  LetterAllocator fresh;
  Dfa d;
  if (kind == "power")
    d = build_power(k, fresh);
  else if (kind == "stirling")
    d = build_stirling(k, fresh);
  else if (kind == "poldif")
    d = lemma_language(k, alpha, fresh);
  else
    d = build_const(c, fresh);
  write_dfa(out, d);
  return 0;
}

int cmd_rep(const fs::path& dir, const std::string& value) {
  NumerationSystem sys(load_system_dfa(dir));
  BigInt n(value);
  std::cout << format_word(sys.alphabet().decode(unrank(sys, n))) << '\n';
  return 0;
}

int cmd_val(const fs::path& dir, const std::vector<std::string>& parts) {
  NumerationSystem sys(load_system_dfa(dir));
  std::string joined;
  for (const auto& p : parts) joined += p + ' ';
  Word w = sys.alphabet().encode(parse_word(joined, sys.alphabet()));
  std::cout << rank(sys, w) << '\n';
  return 0;
}

int cmd_density(const fs::path& where, std::size_t max_len) {
  Dfa d = load_system_dfa(where);
  CountTable table(d);
  for (std::size_t n = 0; n <= max_len; ++n) std::cout << n << '\t' << table.density(n) << '\n';
  return 0;
}

int cmd_verify(const fs::path& dir, std::size_t max_value) {
  LoadedBundle b = load_bundle(dir);
  const std::set<BigInt> image = image_up_to(b.manifest.polynomial, BigInt(max_value));
  oracle::EnumerationCursor cursor(b.system, oracle::Budget{max_value + 1, 1000});
  Word w;
  std::size_t index = 0;
  for (; index <= max_value && cursor.next(w); ++index) {
    const bool expected = image.count(BigInt(index)) != 0;
    if (accepts(b.recognizer, w) != expected) {
      std::cerr << "mismatch at value " << index << " (word '" << format_word(b.system.alphabet().decode(w))
                << "'): recognizer " << (expected ? "rejects" : "accepts") << " it, but " << index
                << (expected ? " is" : " is not") << " a value of the polynomial\n";
      return 1;
    }
  }
  std::cout << "ok " << index << " values checked\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numeration systems on regular languages recognizing polynomial images"};
  app.require_subcommand(1);

  std::string poly;
  fs::path out, system;
  std::size_t budget = kDefaultStateBudget;
  auto* build = app.add_subcommand("build", "build a numeration system for a polynomial");
  build->add_option("--poly", poly, "polynomial (expression or coefficient list)")->required();
  build->add_option("--out", out, "output directory")->required();
  build->add_option("--state-budget", budget, "decimation state budget");

  std::string kind;
  std::size_t k = 0, alpha = 1, c = 1;
  auto* lang = app.add_subcommand("lang", "emit a stock language");
  lang->add_option("--kind", kind)->required()->check(CLI::IsMember({"power", "stirling", "poldif", "const"}));
  lang->add_option("--k", k, "degree");
  lang->add_option("--alpha", alpha, "PolDif threshold");
  lang->add_option("--c", c, "constant density");
  lang->add_option("--out", out)->required();

  std::string value;
  auto* rep = app.add_subcommand("rep", "representation of a value");
  rep->add_option("--system", system)->required();
  rep->add_option("value", value)->required();

  std::vector<std::string> word;
  auto* val = app.add_subcommand("val", "numerical value of a word");
  val->add_option("--system", system)->required();
  val->add_option("word", word, "letters (space separated)");

  std::size_t max_len = 0;
  auto* dens = app.add_subcommand("density", "words per length");
  dens->add_option("--system", system)->required();
  dens->add_option("--max-len", max_len)->required();

  std::size_t max_value = 0;
  auto* verify = app.add_subcommand("verify", "check the recognizer against enumeration");
  verify->add_option("--system", system)->required();
  verify->add_option("--max-value", max_value)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*build) return cmd_build(poly, out, budget);
    if (*lang) {
      if (kind != "const" && k == 0 && kind != "power") {
        std::cerr << "--k must be positive for --kind " << kind << '\n';
        return 2;
      }
      return cmd_lang(kind, k, alpha, c, out);
    }
    if (*rep) return cmd_rep(system, value);
    if (*val) return cmd_val(system, word);
    if (*dens) return cmd_density(system, max_len);
    if (*verify) return cmd_verify(system, max_value);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
