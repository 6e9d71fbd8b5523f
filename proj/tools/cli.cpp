#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kcrank/catalog.hpp"
#include "kcrank/errors.hpp"
#include "kcrank/oracle.hpp"
#include "kcrank/prime_split.hpp"
#include "kcrank/rank_formulas.hpp"

namespace kcrank {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw kcrank_error(errc::io, "cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw kcrank_error(errc::io, "failed while reading '" + path + "'");
  }
  return buffer.str();
}

void emit(const std::string& text, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw kcrank_error(errc::io, "cannot open '" + out_path + "' for writing");
  }
  file << text;
  file.flush();
  if (!file) {
    throw kcrank_error(errc::io, "failed while writing '" + out_path + "'");
  }
}

LiteralVariant variant_from_name(const std::string& name) {
  std::string known;
  for (LiteralVariant variant : all_literal_variants()) {
    if (name == variant_name(variant)) return variant;
    if (!known.empty()) known += ", ";
    known += variant_name(variant);
  }
  throw kcrank_error(errc::syntax, "unknown literal variant '" + name +
                                       "' (known: " + known + ")");
}

// The split-based modes need one prime of m; an explicit --prime always
// wins (divisibility is checked downstream), otherwise the prime must be
// unambiguous.
unsigned long resolve_prime(const ActionSpec& spec, unsigned long prime_flag) {
  if (prime_flag != 0) return prime_flag;
  if (spec.primes.size() == 1) return spec.primes.front();
  std::ostringstream msg;
  msg << "m = " << spec.m << " has " << spec.primes.size()
      << " prime factors; pass --prime";
  throw kcrank_error(errc::order, msg.str());
}

std::string describe_spec(const ActionSpec& spec) {
  std::ostringstream text;
  text << "name: " << (spec.name.empty() ? "(unnamed)" : spec.name) << '\n';
  text << "n: " << spec.n << '\n';
  text << "m: " << spec.m << '\n';
  text << "primes:";
  for (unsigned long p : spec.primes) text << ' ' << p;
  text << '\n';
  text << "order: " << spec.order << '\n';
  text << "free-outside-origin: "
       << (free_outside_origin(spec) ? "yes" : "no") << '\n';
  return text.str();
}

}  // namespace

int cli_main(std::vector<std::string> args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{
      "exact K-theory ranks of lattice semidirect products by square-free "
      "cyclic groups"};
  app.name("kcrank");
  app.require_subcommand(1);

  int rc = 0;

  // --- validate ----------------------------------------------------------
  std::string validate_path;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "parse and validate an action spec");
  validate_cmd->add_option("spec", validate_path, "action spec file")
      ->required();
  validate_cmd->callback([&] { out << describe_spec(parse_spec_text(read_file(validate_path))); });

  // --- compute -----------------------------------------------------------
  std::string compute_path;
  std::string compute_mode = "oracle";
  std::string compute_variant = "full-tuple-multiplier";
  unsigned long compute_prime = 0;
  int compute_alpha = -1;
  bool compute_strict = false;
  std::string compute_out;
  CLI::App* compute_cmd =
      app.add_subcommand("compute", "compute K-theory ranks in one mode");
  compute_cmd->add_option("spec", compute_path, "action spec file")
      ->required();
  compute_cmd
      ->add_option("--mode", compute_mode,
                   "oracle, assembled, pure-p, literal or all")
      ->check(CLI::IsMember(
          {"oracle", "assembled", "pure-p", "literal", "all"}))
      ->capture_default_str();
  compute_cmd->add_option("--prime", compute_prime,
                          "prime of m for the split-based modes");
  compute_cmd
      ->add_option("--variant", compute_variant,
                   "literal reading (see cross-check output for the list)")
      ->capture_default_str();
  compute_cmd
      ->add_option("--alpha", compute_alpha,
                   "print only the rank of K_alpha as a bare integer")
      ->check(CLI::Range(0, 1));
  compute_cmd->add_flag("--strict", compute_strict,
                        "with --mode all: exit 3 when any cell diverges");
  compute_cmd->add_option("--out", compute_out, "write output to a file");
  compute_cmd->callback([&] {
    const ActionSpec spec = parse_spec_text(read_file(compute_path));
    std::vector<RankReport> reports;
    std::string verdict;
    if (compute_mode == "oracle") {
      reports.push_back(delocalized_rank(spec));
    } else if (compute_mode == "assembled") {
      reports.push_back(
          assembled_rank(spec, resolve_prime(spec, compute_prime)));
    } else if (compute_mode == "literal") {
      reports.push_back(literal_rank(spec,
                                     resolve_prime(spec, compute_prime),
                                     variant_from_name(compute_variant)));
    } else if (compute_mode == "pure-p") {
      const unsigned long p = resolve_prime(spec, compute_prime);
      if (spec.m != p) {
        std::ostringstream msg;
        msg << "pure-p mode applies to prime m only (m = " << spec.m << ")";
        throw kcrank_error(errc::order, msg.str());
      }
      reports.push_back(pure_p_full_ranks(spec, prime_split(spec, p)));
    } else {  // all
      ConsistencyReport check = cross_check(spec);
      reports = std::move(check.cells);
      verdict = check.verdict;
    }

    if (compute_alpha >= 0) {
      if (reports.size() != 1) {
        throw kcrank_error(errc::syntax,
                           "--alpha needs a single-mode compute");
      }
      emit(reports.front().rank(compute_alpha).get_str() + "\n",
           compute_out, out);
    } else {
      JsonValue doc = JsonValue::object();
      doc.set("schema", JsonValue::integer(1));
      doc.set("spec", spec_to_json(spec));
      JsonValue cells = JsonValue::array();
      for (const RankReport& report : reports) {
        cells.push_back(report_to_json(report));
      }
      doc.set("reports", std::move(cells));
      if (!verdict.empty()) doc.set("verdict", JsonValue::string(verdict));
      emit(json_write(doc), compute_out, out);
    }
    if (compute_strict && verdict == "divergent") rc = 3;
  });

  // --- cross-check -------------------------------------------------------
  std::string check_path;
  bool check_strict = false;
  bool check_no_assembled = false;
  bool check_no_pure_p = false;
  bool check_no_literal = false;
  std::vector<std::string> check_variants;
  std::string check_out;
  CLI::App* check_cmd = app.add_subcommand(
      "cross-check", "run every mode and classify against the oracle");
  check_cmd->add_option("spec", check_path, "action spec file")->required();
  check_cmd->add_flag("--strict", check_strict,
                      "exit 3 when any cell diverges from the oracle");
  check_cmd->add_flag("--no-assembled", check_no_assembled,
                      "skip the assembled mode");
  check_cmd->add_flag("--no-pure-p", check_no_pure_p,
                      "skip the pure-p mode");
  check_cmd->add_flag("--no-literal", check_no_literal,
                      "skip the literal mode");
  check_cmd->add_option("--variant", check_variants,
                        "literal readings to include (repeatable)");
  check_cmd->add_option("--out", check_out, "write output to a file");
  check_cmd->callback([&] {
    const ActionSpec spec = parse_spec_text(read_file(check_path));
    CrossCheckOptions options;
    options.include_assembled = !check_no_assembled;
    options.include_pure_p = !check_no_pure_p;
    options.include_literal = !check_no_literal;
    if (!check_variants.empty()) {
      options.variants.clear();
      for (const std::string& name : check_variants) {
        options.variants.push_back(variant_from_name(name));
      }
    }
    const ConsistencyReport check = cross_check(spec, options);
    emit(json_write(consistency_to_json(check)), check_out, out);
    if (check_strict && check.verdict == "divergent") rc = 3;
  });

  // --- catalog run -------------------------------------------------------
  std::string catalog_path;
  bool catalog_strict = false;
  std::string catalog_out;
  CLI::App* catalog_cmd =
      app.add_subcommand("catalog", "operate on catalog files");
  catalog_cmd->require_subcommand(1);
  CLI::App* run_cmd = catalog_cmd->add_subcommand(
      "run", "cross-check every entry and compare to expectations");
  run_cmd->add_option("catalog", catalog_path, "catalog file")->required();
  run_cmd->add_flag("--strict", catalog_strict,
                    "exit 3 on expectation mismatch or divergence");
  run_cmd->add_option("--out", catalog_out, "write output to a file");
  run_cmd->callback([&] {
    const std::vector<CatalogEntry> entries =
        parse_catalog_text(read_file(catalog_path));
    BatchOptions options;
    options.strict = catalog_strict;
    const BatchOutcome outcome = run_batch(entries, options);
    emit(json_write(batch_to_json(outcome)), catalog_out, out);
    rc = outcome.exit_code;
  });

  // --- generate ----------------------------------------------------------
  std::string family;
  std::vector<unsigned long> family_numbers;
  std::vector<std::string> family_bases;
  std::uint64_t family_seed = 0;
  std::string family_name;
  std::string family_out;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "emit a spec from a named family");
  generate_cmd
      ->add_option("--family", family,
                   "cyclotomic, permutation, direct-sum or conjugate")
      ->required();
  generate_cmd->add_option(
      "--number", family_numbers,
      "numeric parameters (prime, or cycle lengths; repeatable)");
  generate_cmd->add_option(
      "--base", family_bases,
      "base spec files for direct-sum / conjugate (repeatable)");
  generate_cmd->add_option("--seed", family_seed,
                           "seed for the conjugate family");
  generate_cmd->add_option("--name", family_name,
                           "override the generated name");
  generate_cmd->add_option("--out", family_out, "write output to a file");
  generate_cmd->callback([&] {
    FamilyRequest request;
    request.family = family;
    request.numbers = family_numbers;
    request.seed = family_seed;
    for (const std::string& path : family_bases) {
      request.specs.push_back(parse_spec_text(read_file(path)));
    }
    ActionSpec spec = generate_family(request);
    if (!family_name.empty()) spec.name = family_name;
    emit(json_write(spec_to_json(spec)), family_out, out);
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const kcrank_error& e) {
    err << e.what() << '\n';
    if (e.code() == errc::io) return 1;
    if (e.code() == errc::internal) return 4;
    return 2;
  } catch (const std::exception& e) {
    err << "E_INTERNAL: " << e.what() << '\n';
    return 4;
  }
  return rc;
}

}  // namespace kcrank
