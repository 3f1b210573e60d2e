#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thetaq/bigreal.hpp"
#include "thetaq/rational.hpp"
#include "thetaq/relation.hpp"

namespace thetaq {

enum class EntryKind { closed_form, poly_relation, series_identity };
enum class Expectation { expected_pass, known_discrepancy };
enum class Verdict { pass, fail, flagged };

std::string to_string(EntryKind k);
std::string to_string(Expectation e);
std::string to_string(Verdict v);

struct VerifyOptions {
  int digits = 60;
  Rational order = 150;
  std::vector<Rational> rs{Rational(1), Rational(2), Rational(3)};
  /// Attach a re-mined relation to failing polynomial entries.
  bool remine = true;
  /// Worker threads for verify_all; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// One numeric check. `point` is the printed abscissa ("2", "1/2", "1/sqrt(2)")
/// and `variable` names it ("r" for nome points, "x" for moduli).
struct PointResidual {
  std::string variable = "r";
  std::string point;
  int digits = 0;
  BigReal residual;
  BigReal tolerance;
  bool passed() const { return residual < tolerance; }
};

struct EntryReport {
  std::string id;
  EntryKind kind = EntryKind::closed_form;
  Expectation expectation = Expectation::expected_pass;
  Verdict verdict = Verdict::fail;
  std::vector<PointResidual> residuals;
  /// Order through which the series residual was examined, when there is one.
  std::optional<Rational> series_order;
  /// True when the series residual vanished through series_order.
  bool series_zero = true;
  /// Leading exponent of a nonzero series residual.
  std::optional<Rational> series_failure_at;
  std::string notes;
  std::optional<MinedRelation> remined;
};

/// A polynomial relation with its variable bindings.
struct PolyRecipe {
  UBinding u;
  VBinding v;
  BivarIntPoly poly;
  /// Remine attempts in order: binding pair plus s_max.
  struct Attempt {
    UBinding u;
    VBinding v;
    int s_max;
  };
  std::vector<Attempt> remine;
};

struct CatalogEntry {
  std::string id;
  EntryKind kind;
  Expectation expectation;
  std::string summary;
  std::optional<PolyRecipe> poly;
  std::function<EntryReport(const CatalogEntry&, const VerifyOptions&)> run;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& find_entry(const std::string& id);  // throws NotFound

/// Runs one entry. Numeric work is done at digits + the guard; residuals are
/// compared against 10^{-digits+10}.
EntryReport verify_entry(const std::string& id, const VerifyOptions& opts);

struct Report {
  VerifyOptions run;
  std::vector<EntryReport> entries;
};

/// All entries on a bounded worker pool, reported in catalog order.
Report verify_all(const VerifyOptions& opts);

/// Re-mines a polynomial entry through its attempt list; throws NotFound
/// when every attempt fails.
MinedRelation remine_entry(const std::string& id, const VerifyOptions& opts);

/// Passing entries always qualify; known discrepancies qualify unless a
/// needed replacement relation could not be found.
bool meets_expectation(const EntryReport& r);

/// Multiplier candidates for the quintic relation, by name.
inline constexpr const char* kM5Direct = "theta3(q^5)^2/theta3(q)^2";
inline constexpr const char* kM5Reciprocal = "theta3(q)^2/theta3(q^5)^2";

}  // namespace thetaq
