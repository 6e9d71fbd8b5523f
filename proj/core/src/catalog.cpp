#include "kcrank/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace kcrank {

namespace {

const JsonValue& require_member(const JsonValue& doc, const char* key,
                                JsonValue::Kind kind, const char* what) {
  if (!doc.is(JsonValue::Kind::object)) {
    throw kcrank_error(errc::syntax,
                       std::string(what) + " must be an object");
  }
  const JsonValue* member = doc.find(key);
  if (!member) {
    throw kcrank_error(errc::syntax, std::string(what) +
                                          " is missing required key '" +
                                          key + "'");
  }
  if (!member->is(kind)) {
    throw kcrank_error(errc::syntax, std::string(what) + " key '" + key +
                                          "' has the wrong type");
  }
  return *member;
}

unsigned long to_ulong(const mpz_class& value, const char* what) {
  if (value < 0 || !value.fits_ulong_p()) {
    std::ostringstream msg;
    msg << what << " value " << value << " is out of range";
    throw kcrank_error(errc::syntax, msg.str());
  }
  return value.get_ui();
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

ActionSpec parse_spec(const JsonValue& doc) {
  const JsonValue& n_value =
      require_member(doc, "n", JsonValue::Kind::integer, "action document");
  const JsonValue& m_value =
      require_member(doc, "m", JsonValue::Kind::integer, "action document");
  const JsonValue& matrix_value =
      require_member(doc, "matrix", JsonValue::Kind::array,
                     "action document");

  const unsigned long n = to_ulong(n_value.as_int(), "n");
  const unsigned long m = to_ulong(m_value.as_int(), "m");

  if (matrix_value.items().size() != n) {
    std::ostringstream msg;
    msg << "matrix has " << matrix_value.items().size()
        << " rows but n = " << n;
    throw kcrank_error(errc::dimension, msg.str());
  }
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const JsonValue& row = matrix_value.items()[i];
    if (!row.is(JsonValue::Kind::array) || row.items().size() != n) {
      std::ostringstream msg;
      msg << "matrix row " << i << " is not an array of length " << n;
      throw kcrank_error(errc::dimension, msg.str());
    }
    for (std::size_t j = 0; j < n; ++j) {
      const JsonValue& entry = row.items()[j];
      if (!entry.is(JsonValue::Kind::integer)) {
        std::ostringstream msg;
        msg << "matrix entry (" << i << ", " << j << ") is not an integer";
        throw kcrank_error(errc::syntax, msg.str());
      }
      a(i, j) = entry.as_int();
    }
  }

  std::string name;
  if (const JsonValue* name_value = doc.find("name")) {
    if (!name_value->is(JsonValue::Kind::string)) {
      throw kcrank_error(errc::syntax, "name must be a string");
    }
    name = name_value->as_string();
  }
  return validate_action(a, m, name);
}

ActionSpec parse_spec_text(const std::string& text) {
  return parse_spec(json_parse(text));
}

JsonValue spec_to_json(const ActionSpec& spec) {
  JsonValue doc = JsonValue::object();
  doc.set("n", JsonValue::integer(mpz_class(static_cast<unsigned long>(spec.n))));
  doc.set("m", JsonValue::integer(mpz_class(spec.m)));
  JsonValue matrix = JsonValue::array();
  for (std::size_t i = 0; i < spec.n; ++i) {
    JsonValue row = JsonValue::array();
    for (std::size_t j = 0; j < spec.n; ++j) {
      row.push_back(JsonValue::integer(spec.a(i, j)));
    }
    matrix.push_back(std::move(row));
  }
  doc.set("matrix", std::move(matrix));
  if (!spec.name.empty()) doc.set("name", JsonValue::string(spec.name));
  return doc;
}

std::vector<CatalogEntry> parse_catalog_text(const std::string& text) {
  const JsonValue doc = json_parse(text);
  const JsonValue& schema =
      require_member(doc, "schema", JsonValue::Kind::integer, "catalog");
  if (schema.as_int() != 1) {
    throw kcrank_error(errc::syntax, "unsupported catalog schema version");
  }
  const JsonValue& entries =
      require_member(doc, "entries", JsonValue::Kind::array, "catalog");

  std::vector<CatalogEntry> catalog;
  std::set<std::string> names;
  for (const JsonValue& item : entries.items()) {
    CatalogEntry entry;
    entry.name = require_member(item, "name", JsonValue::Kind::string,
                                "catalog entry")
                     .as_string();
    if (!names.insert(entry.name).second) {
      throw kcrank_error(errc::duplicate_name,
                         "catalog entry '" + entry.name +
                             "' appears more than once");
    }
    entry.spec = parse_spec(require_member(
        item, "spec", JsonValue::Kind::object, "catalog entry"));
    if (entry.spec.name.empty()) entry.spec.name = entry.name;

    if (const JsonValue* expected = item.find("expected")) {
      ExpectedRanks ranks;
      ranks.rank0 = require_member(*expected, "rank0",
                                   JsonValue::Kind::integer, "expected")
                        .as_int();
      ranks.rank1 = require_member(*expected, "rank1",
                                   JsonValue::Kind::integer, "expected")
                        .as_int();
      const JsonValue* provenance = expected->find("provenance");
      if (!provenance || !provenance->is(JsonValue::Kind::string)) {
        throw kcrank_error(errc::provenance,
                           "expected values for '" + entry.name +
                               "' carry no provenance");
      }
      ranks.provenance = provenance->as_string();
      if (ranks.provenance != "trivial" &&
          ranks.provenance != "derived-oracle" &&
          ranks.provenance != "derived-assembly") {
        throw kcrank_error(errc::provenance,
                           "unknown provenance '" + ranks.provenance +
                               "' for '" + entry.name + "'");
      }
      entry.expected = std::move(ranks);
    }
    if (const JsonValue* notes = item.find("notes")) {
      if (!notes->is(JsonValue::Kind::string)) {
        throw kcrank_error(errc::syntax, "notes must be a string");
      }
      entry.notes = notes->as_string();
    }
    catalog.push_back(std::move(entry));
  }
  return catalog;
}

namespace {

ActionSpec family_cyclotomic(unsigned long p) {
  if (!is_prime(p)) {
    throw kcrank_error(errc::family,
                       "cyclotomic family needs a prime parameter");
  }
  // Companion matrix of 1 + x + ... + x^(p-1): subdiagonal ones, last
  // column all -1.
  const std::size_t n = p - 1;
  IntMatrix a(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) a(i + 1, i) = 1;
  for (std::size_t i = 0; i < n; ++i) a(i, n - 1) = -1;
  std::ostringstream name;
  name << "cyclotomic-" << p;
  return validate_action(a, p, name.str());
}

ActionSpec family_permutation(const std::vector<unsigned long>& cycles) {
  if (cycles.empty()) {
    throw kcrank_error(errc::family,
                       "permutation family needs at least one cycle");
  }
  std::size_t n = 0;
  unsigned long m = 1;
  for (unsigned long c : cycles) {
    if (c == 0) {
      throw kcrank_error(errc::family, "cycle lengths must be positive");
    }
    n += c;
    m = std::lcm(m, c);
  }
  IntMatrix a(n, n);
  std::size_t base = 0;
  for (unsigned long c : cycles) {
    for (unsigned long i = 0; i < c; ++i) {
      a(base + (i + 1) % c, base + i) = 1;
    }
    base += c;
  }
  std::ostringstream name;
  name << "permutation-";
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (i) name << '.';
    name << cycles[i];
  }
  return validate_action(a, m, name.str());
}

ActionSpec family_direct_sum(const std::vector<ActionSpec>& parts) {
  if (parts.empty()) {
    throw kcrank_error(errc::family,
                       "direct-sum family needs at least one summand");
  }
  std::size_t n = 0;
  unsigned long m = 1;
  std::string name;
  for (const ActionSpec& part : parts) {
    n += part.n;
    m = std::lcm(m, part.m);
    if (!name.empty()) name += '+';
    name += part.name.empty() ? "block" : part.name;
  }
  IntMatrix a(n, n);
  std::size_t base = 0;
  for (const ActionSpec& part : parts) {
    for (std::size_t i = 0; i < part.n; ++i) {
      for (std::size_t j = 0; j < part.n; ++j) {
        a(base + i, base + j) = part.a(i, j);
      }
    }
    base += part.n;
  }
  return validate_action(a, m, name);
}

ActionSpec family_conjugate(const ActionSpec& base, std::uint64_t seed) {
  const std::size_t n = base.n;
  IntMatrix u = IntMatrix::identity(n);
  if (n >= 2) {
    // A fixed number of elementary operations drawn from a fixed-
    // algorithm generator; raw 64-bit draws are reduced by modulus so the
    // construction is identical on every platform.
    std::mt19937_64 rng(seed);
    const int steps = 16;
    for (int step = 0; step < steps; ++step) {
      const std::size_t i = rng() % n;
      std::size_t j = rng() % (n - 1);
      if (j >= i) ++j;
      switch (rng() % 4) {
        case 0:
        case 1: {  // shear: row i += +-1 * row j
          const long sign = (rng() % 2 == 0) ? 1 : -1;
          for (std::size_t c = 0; c < n; ++c) {
            u(i, c) += sign * u(j, c);
          }
          break;
        }
        case 2: {  // swap rows
          for (std::size_t c = 0; c < n; ++c) std::swap(u(i, c), u(j, c));
          break;
        }
        case 3: {  // negate a row
          for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
          break;
        }
      }
    }
  }
  IntMatrix conjugated = u * base.a * unimodular_inverse(u);
  std::ostringstream name;
  name << (base.name.empty() ? "spec" : base.name) << "~conjugate(seed="
       << seed << ")";
  return validate_action(conjugated, base.m, name.str());
}

}  // namespace

ActionSpec generate_family(const FamilyRequest& request) {
  if (request.family == "cyclotomic") {
    if (request.numbers.size() != 1) {
      throw kcrank_error(errc::family,
                         "cyclotomic family takes exactly one number");
    }
    return family_cyclotomic(request.numbers.front());
  }
  if (request.family == "permutation") {
    return family_permutation(request.numbers);
  }
  if (request.family == "direct-sum") {
    return family_direct_sum(request.specs);
  }
  if (request.family == "conjugate") {
    if (request.specs.size() != 1) {
      throw kcrank_error(errc::family,
                         "conjugate family takes exactly one base spec");
    }
    return family_conjugate(request.specs.front(), request.seed);
  }
  throw kcrank_error(errc::family,
                     "unknown family '" + request.family + "'");
}

JsonValue report_to_json(const RankReport& report) {
  JsonValue doc = JsonValue::object();
  doc.set("mode", JsonValue::string(report.mode));
  if (!report.variant.empty()) {
    doc.set("variant", JsonValue::string(report.variant));
  }
  if (report.prime) {
    doc.set("prime", JsonValue::integer(mpz_class(*report.prime)));
  }
  doc.set("rank0", JsonValue::integer(report.rank0));
  doc.set("rank1", JsonValue::integer(report.rank1));
  doc.set("groups", JsonValue::string(report.groups));
  JsonValue breakdown = JsonValue::array();
  for (const auto& [term, value] : report.breakdown) {
    JsonValue item = JsonValue::object();
    item.set("term", JsonValue::string(term));
    item.set("value", JsonValue::integer(value));
    breakdown.push_back(std::move(item));
  }
  doc.set("breakdown", std::move(breakdown));
  JsonValue flags = JsonValue::array();
  for (const auto& flag : report.flags) {
    flags.push_back(JsonValue::string(flag));
  }
  doc.set("flags", std::move(flags));
  return doc;
}

namespace {

JsonValue divergence_to_json(const Divergence& div) {
  JsonValue item = JsonValue::object();
  item.set("left", JsonValue::string(div.left));
  item.set("right", JsonValue::string(div.right));
  item.set("delta0", JsonValue::integer(div.delta0));
  item.set("delta1", JsonValue::integer(div.delta1));
  return item;
}

}  // namespace

JsonValue consistency_to_json(const ConsistencyReport& report) {
  JsonValue doc = JsonValue::object();
  doc.set("schema", JsonValue::integer(1));
  doc.set("spec", spec_to_json(report.spec));
  JsonValue cells = JsonValue::array();
  for (const RankReport& cell : report.cells) {
    cells.push_back(report_to_json(cell));
  }
  doc.set("cells", std::move(cells));
  JsonValue agreements = JsonValue::array();
  for (const auto& [cell, reference] : report.agreements) {
    JsonValue item = JsonValue::object();
    item.set("cell", JsonValue::string(cell));
    item.set("reference", JsonValue::string(reference));
    agreements.push_back(std::move(item));
  }
  doc.set("agreements", std::move(agreements));
  JsonValue divergences = JsonValue::array();
  for (const Divergence& div : report.divergences) {
    divergences.push_back(divergence_to_json(div));
  }
  doc.set("divergences", std::move(divergences));
  JsonValue cross_prime = JsonValue::array();
  for (const Divergence& div : report.cross_prime) {
    cross_prime.push_back(divergence_to_json(div));
  }
  doc.set("cross_prime", std::move(cross_prime));
  doc.set("verdict", JsonValue::string(report.verdict));
  return doc;
}

namespace {

BatchEntryOutcome run_entry(const CatalogEntry& entry,
                            const BatchOptions& options) {
  BatchEntryOutcome result;
  result.name = entry.name;
  try {
    ConsistencyReport check = cross_check(entry.spec, options.check);
    const RankReport& oracle = check.cells.front();
    result.status = "ok";
    if (entry.expected) {
      if (entry.expected->rank0 != oracle.rank0 ||
          entry.expected->rank1 != oracle.rank1) {
        result.status = "mismatch";
        std::ostringstream note;
        note << "expected-mismatch: rank0 computed=" << oracle.rank0
             << " expected=" << entry.expected->rank0
             << "; rank1 computed=" << oracle.rank1
             << " expected=" << entry.expected->rank1 << " (provenance "
             << entry.expected->provenance << ")";
        result.flags.push_back(note.str());
      } else {
        std::ostringstream note;
        note << "expected-match (provenance " << entry.expected->provenance
             << ")";
        result.flags.push_back(note.str());
      }
    }
    if (check.verdict == "divergent") {
      std::ostringstream note;
      note << "modes-divergent: " << check.divergences.size()
           << " cell(s) differ from the oracle";
      result.flags.push_back(note.str());
    }
    result.check = std::move(check);
  } catch (const kcrank_error& err) {
    result.status = "error";
    result.error_code = errc_name(err.code());
    result.error_message = err.what();
  } catch (const std::exception& err) {
    result.status = "error";
    result.error_code = "E_INTERNAL";
    result.error_message = err.what();
  }
  return result;
}

}  // namespace

BatchOutcome run_batch(const std::vector<CatalogEntry>& entries,
                       const BatchOptions& options) {
  // Entries are independent, so they run on a small worker pool; each
  // worker writes only its own slots and the tallies below happen on one
  // thread afterwards.
  std::vector<BatchEntryOutcome> results(entries.size());
  std::size_t workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min(workers, entries.size());
  if (workers > 1) {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= entries.size()) break;
          results[i] = run_entry(entries[i], options);
        }
      });
    }
    for (std::thread& worker : pool) worker.join();
  } else {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      results[i] = run_entry(entries[i], options);
    }
  }

  BatchOutcome outcome;
  bool any_divergence = false;
  for (BatchEntryOutcome& result : results) {
    if (result.status == "ok") {
      ++outcome.matched;
    } else if (result.status == "mismatch") {
      ++outcome.mismatched;
    } else {
      ++outcome.errors;
    }
    if (result.check && result.check->verdict == "divergent") {
      any_divergence = true;
    }
    outcome.entries.push_back(std::move(result));
  }
  if (outcome.errors > 0) {
    outcome.exit_code = 2;
  } else if (options.strict && (outcome.mismatched > 0 || any_divergence)) {
    outcome.exit_code = 3;
  } else {
    outcome.exit_code = 0;
  }
  return outcome;
}

JsonValue batch_to_json(const BatchOutcome& outcome) {
  JsonValue doc = JsonValue::object();
  doc.set("schema", JsonValue::integer(1));
  JsonValue entries = JsonValue::array();
  for (const BatchEntryOutcome& entry : outcome.entries) {
    JsonValue item = JsonValue::object();
    item.set("name", JsonValue::string(entry.name));
    item.set("status", JsonValue::string(entry.status));
    JsonValue flags = JsonValue::array();
    for (const auto& flag : entry.flags) {
      flags.push_back(JsonValue::string(flag));
    }
    item.set("flags", std::move(flags));
    if (entry.check) {
      item.set("cross_check", consistency_to_json(*entry.check));
    }
    if (!entry.error_code.empty()) {
      JsonValue error = JsonValue::object();
      error.set("code", JsonValue::string(entry.error_code));
      error.set("message", JsonValue::string(entry.error_message));
      item.set("error", std::move(error));
    }
    entries.push_back(std::move(item));
  }
  doc.set("entries", std::move(entries));
  JsonValue summary = JsonValue::object();
  summary.set("total", JsonValue::integer(
                           static_cast<unsigned long>(outcome.entries.size())));
  summary.set("ok", JsonValue::integer(
                        static_cast<unsigned long>(outcome.matched)));
  summary.set("mismatched",
              JsonValue::integer(
                  static_cast<unsigned long>(outcome.mismatched)));
  summary.set("errors", JsonValue::integer(
                            static_cast<unsigned long>(outcome.errors)));
  doc.set("summary", std::move(summary));
  return doc;
}

}  // namespace kcrank
