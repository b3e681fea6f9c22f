#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ballmagic/ball.hpp"
#include "ballmagic/catalog.hpp"
#include "ballmagic/codes.hpp"
#include "ballmagic/digits.hpp"
#include "ballmagic/revdiv.hpp"
#include "ballmagic/verify.hpp"

namespace {

using namespace ballmagic;

int cmd_ball(const std::string& input) {
  DigitString x = DigitString::parse(input);
  BallResult r = ball_number(x);
  std::cout << "x  = " << r.input.to_string() << '\n'
            << "x' = " << r.input_reversed.to_string() << '\n';
  if (r.swapped)
    std::cout << "(reverse exceeds input; difference taken as x' - x)\n";
  std::cout << "y  = " << r.difference.to_string() << '\n'
            << "y' = " << r.difference_reversed.to_string() << '\n'
            << "B  = " << r.ball_value.to_decimal() << '\n'
            << "code      = " << r.code.to_string() << " ("
            << to_string(r.code.kind()) << ")\n"
            << "truncated = " << r.code.truncated().to_string() << '\n'
            << "identity  = 99 * " << r.truncated_value.to_decimal() << " = "
            << r.ball_value.to_decimal() << '\n';
  return 0;
}

int cmd_code(const std::string& input) {
  DigitString x = DigitString::parse(input);
  DerivedCode derived = code_of(x);
  std::cout << "code       = " << derived.code.to_string() << '\n'
            << "class      = " << to_string(derived.code.kind()) << '\n'
            << "truncated  = " << derived.code.truncated().to_string()
            << " (numeral "
            << derived.code.truncated().numeral_value().to_decimal() << ")\n"
            << "swapped    = " << (derived.swapped ? "yes" : "no") << '\n';
  return 0;
}

int cmd_enumerate(unsigned width, const std::string& format) {
  write_catalog(std::cout, make_ball_catalog(width),
                parse_catalog_format(format));
  return 0;
}

int cmd_revdiv(unsigned digits, bool allow_large) {
  SearchOptions options;
  options.allow_large = allow_large;
  auto found = search_reverse_divisors(digits, options);

  // Cross-check against the closed forms: both family values must appear
  // (for 4+ digits). Hits beyond them are real too -- block concatenations
  // like 10891089 start at 8 digits -- and are marked "extra".
  bool has_nine = false, has_four = false;
  if (digits >= 4) {
    const RevDivRecord nine = closed_form(RevDivFamily::Nine, digits);
    const RevDivRecord four = closed_form(RevDivFamily::Four, digits);
    for (const RevDivRecord& r : found) {
      if (r.value == nine.value && r.quotient == 9) has_nine = true;
      if (r.value == four.value && r.quotient == 4) has_four = true;
    }
  }
  const bool crosscheck = digits <= 3 ? found.empty() : has_nine && has_four;

  std::cout << "digits,value,reverse,k,family,crosscheck\n";
  for (const RevDivRecord& r : found) {
    const char* marker = !crosscheck            ? "mismatch"
                         : r.family == RevDivFamily::Other ? "extra"
                                                           : "ok";
    std::cout << r.digit_count << ',' << r.value.to_decimal() << ','
              << r.reverse_value.to_decimal() << ',' << r.quotient << ','
              << to_string(r.family) << ',' << marker << '\n';
  }
  return crosscheck ? 0 : 3;
}

int cmd_decompose(unsigned n) {
  SumDecomposition d = sum_decomposition(n);
  std::string ones(n, '1');
  std::cout << "repunit    = " << ones << " (n = " << n << ")\n"
            << "code       = " << ones << "0\n"
            << "A (strict) = " << d.a.to_string() << '\n'
            << "C (extended) = " << d.c.to_string() << '\n'
            << "B1 = " << d.b1.to_decimal() << " (99 * "
            << d.a.truncated().numeral_value().to_decimal() << ")\n"
            << "B2 = " << d.b2.to_decimal() << " (99 * "
            << d.c.truncated().numeral_value().to_decimal() << ")\n"
            << "B1 + B2 = " << d.total.to_decimal() << " = 99 * "
            << repunit(n).to_decimal() << '\n';
  return 0;
}

int cmd_verify(const std::string& suite) {
  SuiteResult result = run_verify_suite(suite);
  unsigned failed = 0;
  for (const ClaimResult& claim : result.claims) {
    std::cout << (claim.pass ? "ok   " : "FAIL ") << claim.name;
    if (!claim.detail.empty()) std::cout << " [" << claim.detail << "]";
    std::cout << '\n';
    if (!claim.pass) ++failed;
  }
  std::cout << result.suite << ": " << (result.claims.size() - failed) << "/"
            << result.claims.size() << " claims hold\n";
  return failed == 0 ? 0 : 3;
}

int cmd_catalog(unsigned max_width, const std::string& format,
                const std::string& out_path) {
  if (max_width < 2)
    throw std::out_of_range("catalog: max width must be at least 2");
  std::vector<CatalogEntry> entries;
  for (unsigned w = 2; w <= max_width; ++w)
    for (CatalogEntry& e : make_ball_catalog(w))
      entries.push_back(std::move(e));

  if (out_path.empty()) {
    write_catalog(std::cout, entries, parse_catalog_format(format));
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
      throw std::invalid_argument("catalog: cannot open output file " + out_path);
    write_catalog(out, entries, parse_catalog_format(format));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact arithmetic for the reverse-subtract-add pipeline: magic "
      "numbers, their 0/1 borrow codes, reverse divisors and the square "
      "products connecting them."};
  app.require_subcommand(1);

  std::string number;
  auto* ball = app.add_subcommand("ball", "Run the pipeline on one number");
  ball->add_option("number", number, "non-palindromic number, at least 2 digits")
      ->required();

  auto* code = app.add_subcommand("code", "Borrow code of one number");
  code->add_option("number", number, "non-palindromic number, at least 2 digits")
      ->required();

  unsigned width = 0;
  std::string format = "csv";
  auto* enumerate =
      app.add_subcommand("enumerate", "Catalog of one width, one row per code");
  enumerate->add_option("--width", width, "input digit count (2..24)")->required();
  enumerate->add_option("--format", format, "csv, json or tex");

  unsigned digits = 0;
  bool allow_large = false;
  auto* revdiv =
      app.add_subcommand("revdiv", "Exhaustive reverse-divisor search");
  revdiv->add_option("--digits", digits, "digit count (2..9, 10..12 behind --allow-large)")
      ->required();
  revdiv->add_flag("--allow-large", allow_large, "opt into 10..12 digits");

  unsigned repunit_n = 0;
  auto* decompose =
      app.add_subcommand("decompose", "Split 99 * R_n into two magic numbers");
  decompose->add_option("--repunit", repunit_n, "number of ones (n >= 2)")
      ->required();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("--suite", suite,
                     "ball99, census, revdiv-complete, squares, decompose, all")
      ->required();

  unsigned max_width = 0;
  std::string out_path;
  auto* catalog =
      app.add_subcommand("catalog", "Catalog for every width up to a bound");
  catalog->add_option("--max-width", max_width, "largest width (2..24)")->required();
  catalog->add_option("--format", format, "csv, json or tex");
  catalog->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(ball)) return cmd_ball(number);
    if (app.got_subcommand(code)) return cmd_code(number);
    if (app.got_subcommand(enumerate)) return cmd_enumerate(width, format);
    if (app.got_subcommand(revdiv)) return cmd_revdiv(digits, allow_large);
    if (app.got_subcommand(decompose)) return cmd_decompose(repunit_n);
    if (app.got_subcommand(verify)) return cmd_verify(suite);
    if (app.got_subcommand(catalog)) return cmd_catalog(max_width, format, out_path);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
