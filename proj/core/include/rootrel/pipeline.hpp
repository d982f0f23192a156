#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootrel/automorphisms.hpp"
#include "rootrel/characters.hpp"
#include "rootrel/relations.hpp"

namespace rootrel::pipeline {

struct AnalysisOptions {
  int digits = 64;
  int max_digits = 1024;
  int escalation_factor = 2;
  algebra::BigInt den_bound{1000000};
  algebra::BigInt height_bound;  // defaults to 2^64, set by make_default
  bool oracle = true;
  std::string format = "json";   // "json" | "table"
  static AnalysisOptions make_default();
};

struct AnalysisRequest {
  numeric::IntPolynomial f{std::vector<algebra::BigInt>{}};
  // Root rows to analyze, as integer polynomial expressions in the first
  // root; defaults to the identity expression.
  std::vector<std::string> root_exprs;
  // Optional supplied action: generator permutations over the sorted-root
  // labels, keyed by label; "sigma" and "mu" also pin the generator choice
  // used for the canonical listing.
  std::vector<std::pair<std::string, group::Permutation>> action;
  AnalysisOptions options;
};

// Parses the request JSON text (not a file path).  Unknown fields are
// rejected; numeric bounds accept either JSON integers or decimal strings.
AnalysisRequest parse_request(const std::string& json_text);

struct ComponentReport {
  std::string id;  // "trivial" | "orbit<k>" | "degree2"
  long order = 0;
  std::vector<long> rep_exponents;
  int orbit_size = 0;
  relations::RelationBasis basis;
  std::string diagnostic;  // degree2 only
  std::optional<std::pair<algebra::BigInt, algebra::BigInt>> ab;
};

struct RowReport {
  std::string expression;
  algebra::Rational trace;  // sum of the transformed roots, exact
  // For S3: the sum over the rotation orbit of the first root whenever it
  // is rational (i.e. the order-2 character contributes); null otherwise.
  std::optional<algebra::Rational> orbit_sum;
  std::vector<ComponentReport> components;
  relations::RelationBasis assembled;
  std::optional<relations::RelationBasis> oracle;
  std::optional<relations::ComparisonReport> comparison;
};

// Plain-data view of a character orbit for reporting; reports carry no
// group-ring values, so they stay valid across copies and moves.
struct CharacterSummary {
  std::string id;  // "trivial" | "orbit<k>"
  long order = 1;
  std::vector<long> exponents;
  int orbit_size = 1;
};

struct AnalysisReport {
  std::vector<algebra::BigInt> polynomial;  // ascending coefficients
  AnalysisOptions options;
  int digits_used = 0;
  group::GaloisData galois;  // relabeled group + roots (normative labels)
  std::vector<CharacterSummary> characters;
  bool two_dim_supported = true;
  // Nonzero leftover of 1 - sum of handled idempotents when the group has
  // degree >= 2 components the tool does not decompose; implies partial.
  std::optional<std::vector<algebra::Rational>> residual_idempotent;
  bool partial = false;
  std::vector<RowReport> rows;
};

// Runs the full analysis with whole-run precision escalation: any stage
// reporting InsufficientPrecision or AmbiguousZero restarts the run at
// escalated digits (results at mixed precision never mix).  Throws
// PrecisionExhausted past max_digits; NotGalois, NotRegular, GroupMismatch,
// SpanMismatch and RequestError pass through.  Unsupported decomposition
// yields a partial report instead of an error.
AnalysisReport run_pipeline(const AnalysisRequest& req);

std::string render_json(const AnalysisReport& rep);
std::string render_table(const AnalysisReport& rep);

// Process exit code for a finished report (0, or 4 when partial).
int report_exit_code(const AnalysisReport& rep);
// Exit code for a failed run: 1 bad request, 2 precision, 3 not Galois,
// 4 unsupported, 5 span mismatch or internal inconsistency.
int error_exit_code(const std::exception& e);

}  // namespace rootrel::pipeline
