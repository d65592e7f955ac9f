#pragma once

#include "dowling/rational.hpp"
#include "dowling/series_sum.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dowling::identities {

enum class Variant { as_printed, corrected };
enum class Verdict { holds, fails, skipped };

std::string to_string(Variant v);
std::string to_string(Verdict v);
std::optional<Variant> variant_from_string(const std::string& s);

// Free parameters of an identity instance.  Only the fields a given identity
// consumes need to be set; n is always meaningful.
struct IdentityParams {
  std::optional<Rational> m, a, a1, a2, x, x1, x2, r;
  unsigned n = 0;
};

// Outcome of checking one identity instance.  For the series-backed tags the
// right-hand side is an enclosure rather than a single rational: `enclosure`
// is set, `rhs` is its midpoint, and the verdict is containment of the exact
// `lhs` (the enclosure width is at most the fixed tolerance, so containment
// decides equality up to that tolerance).  Everywhere else holds means
// lhs == rhs exactly.
struct IdentityReport {
  std::string id;
  Variant variant = Variant::as_printed;
  IdentityParams params;
  Rational lhs;
  Rational rhs;
  Verdict verdict = Verdict::skipped;
  std::string skip_reason;
  std::optional<Enclosure> enclosure;
};

// One line of the JSONL report:
// {"id","variant","params","lhs","rhs","verdict","skip_reason"} with
// rationals as "p/q" strings (lhs/rhs null when skipped); series-backed rows
// additionally carry "lo","hi","terms_used".
std::string to_json_line(const IdentityReport& report);

// Which grid parameters an identity consumes (n is implicit).
namespace param_use {
constexpr unsigned m = 1u << 0;
constexpr unsigned a = 1u << 1;
constexpr unsigned a_pair = 1u << 2;  // a1, a2
constexpr unsigned x = 1u << 3;
constexpr unsigned x_pair = 1u << 4;  // x1, x2
constexpr unsigned r = 1u << 5;
}  // namespace param_use

struct IdentityInfo {
  std::string id;
  std::string statement;  // human-readable as-printed form
  bool has_corrected = false;
  // For these tags the as-printed form is inconsistent with the defining
  // triangle once m != 1; it must still hold at m = 1 and every sweep over
  // points with m != 1 (n >= 1) is expected to exhibit at least one failure.
  bool erratum_candidate = false;
  unsigned min_n_as_printed = 0;
  unsigned min_n_corrected = 0;
  unsigned uses = 0;
};

const std::vector<IdentityInfo>& identity_catalog();
const IdentityInfo* find_identity(const std::string& id);
std::vector<std::string> identity_tags();

// Checks a single instance.  Unknown ids and missing required parameters are
// std::invalid_argument; violated value preconditions come back as skipped
// reports with the reason, never as errors.
IdentityReport check_identity(const std::string& id, Variant variant,
                              const IdentityParams& params);

struct ParameterGrid {
  std::vector<Rational> m_set;
  std::vector<Rational> a_set;  // also supplies a1/a2 pairs and r
  std::vector<Rational> x_set;  // also supplies x1/x2 pairs
  unsigned n_max = 10;

  static ParameterGrid defaults();
};

struct TagStats {
  unsigned holds = 0;
  unsigned fails = 0;
  unsigned skipped = 0;
};

struct SuiteSummary {
  std::vector<IdentityReport> reports;
  std::map<std::pair<std::string, Variant>, TagStats> stats;
  // Human-readable deviations from the expectation table; empty means every
  // outcome was as expected (including the expected as-printed failures of
  // the erratum candidates at m != 1).
  std::vector<std::string> unexpected;

  bool ok() const { return unexpected.empty(); }
};

// Sweeps the listed identities over the grid.  Reports are sorted by id,
// variant, then parameters.  `only_variant` restricts the run to one variant;
// a tag without a distinct corrected form contributes nothing when only the
// corrected variant is requested.
SuiteSummary run_suite(const std::vector<std::string>& ids,
                       const ParameterGrid& grid,
                       std::optional<Variant> only_variant = std::nullopt);

}  // namespace dowling::identities
