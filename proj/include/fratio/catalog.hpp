#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fratio/affine_family.hpp"
#include "fratio/constructor.hpp"
#include "fratio/int_list.hpp"
#include "fratio/rational.hpp"

namespace fratio {

class CatalogError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Where a stored value deviates from its printed source: the printed text of
/// `field` and why it was replaced.
struct Correction {
  std::string field;
  std::string printed;
  std::string note;
};

struct CertifyTarget {
  std::vector<std::int64_t> params;
  std::int64_t p = 0;
};

struct SampledPlan {
  std::int64_t bound = 0;
  long n_max = 0;
};

struct CatalogEntry {
  enum class Kind { List, Family, Row, Link, Span };
  std::string id;
  std::string scope; // norms, families, table or external
  Kind kind = Kind::List;

  // List: expected norm and/or integrality with the given height.
  IntList list;
  std::optional<Rat> norm;
  std::optional<int> height;
  bool sporadic = false; // allowed exception in the small-norm enumeration

  // Family. `height` above is the claimed height.
  std::string family_text;
  std::optional<AffineList> family;
  std::vector<AffineList> identity; // parts whose concatenation is the family
  bool exact = false;
  std::vector<Rat> restricted_points; // the sweep minimum must already occur on this grid
  std::optional<SampledPlan> sampled;
  bool expect_fail = false;
  std::optional<std::vector<std::int64_t>> norm_limit_direction;
  std::optional<Rat> norm_limit;
  std::optional<CertifyTarget> certify;

  // Row and Link: the construction inputs. Row also stores the expected base.
  int row = 0;
  IntList a;
  IntList b;
  IntList base;
  std::string target; // Link and Span: id of the family reproduced
  Coeffs alpha;       // Link: construction parameters as forms in the target's parameters
  Coeffs beta;

  // Span: sum_i coefficients[i] * parts[i].
  std::vector<IntList> parts;
  std::vector<Coeffs> coefficients;

  std::optional<Correction> correction;
};

class Catalog {
public:
  /// Parses a JSON array of entries. Throws CatalogError on malformed data.
  static Catalog parse(std::string_view json);
  /// The catalog compiled into the library.
  static const Catalog &builtin();

  const std::vector<CatalogEntry> &entries() const { return entries_; }
  /// nullptr if absent.
  const CatalogEntry *find(std::string_view id) const;
  const CatalogEntry &at(std::string_view id) const;
  const CatalogEntry &table_row(int row) const;
  /// Lists flagged as allowed exceptions of the small-norm enumeration.
  std::vector<IntList> sporadic_lists() const;

private:
  std::vector<CatalogEntry> entries_;
};

std::string to_string(CatalogEntry::Kind k);

struct IdentityCheck {
  bool symbolic = false; // form multisets agree after cancelling opposite forms
  std::size_t instances = 0;
  std::optional<std::vector<std::int64_t>> failing_params;
  std::string detail;
  bool holds() const { return symbolic && instances > 0 && !failing_params; }
};

/// Checks lhs = parts[0] + parts[1] + ... as families, then on every
/// admissible tuple in [-grid, grid]^d whose lhs instance has the claimed
/// height: each part instance is an integral ratio of height 1, their
/// concatenation is the lhs instance, and the lhs instance is integral.
IdentityCheck verify_decomposition_identity(const AffineList &lhs, std::span<const AffineList> parts,
                                            std::int64_t grid = 20);
IdentityCheck verify_decomposition_identity(const CatalogEntry &e, std::int64_t grid = 20);

struct RowReport {
  std::optional<ConstructionInput> input;
  std::string error; // build_input failure
  bool monotone = false;
  bool base_matches = false;
  bool base_integral = false;
  std::optional<FamilyVerdict> family;
  std::optional<ProofChecks> proof;
  bool ok() const {
    return input && monotone && base_matches && base_integral && family && family->passed() &&
           (!proof || proof->holds());
  }
};

/// Recomputes the base from a and b, compares it with the stored base, and
/// verifies the emitted family exactly. with_proof adds check_proof_inequalities.
RowReport verify_table_row(const CatalogEntry &row, bool with_proof = false);

struct CheckResult {
  std::string entry;
  std::string check;
  bool passed = false;
  bool flagged = false; // documents a correction, never counts as a failure
  std::string detail;
};

struct CatalogReport {
  std::vector<CheckResult> checks;
  std::size_t entries = 0;
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Runs every expectation of every entry in scope ("all", or one of the
/// entry scopes). Entries run in parallel; checks come back in catalog order.
/// Throws CatalogError for an unknown scope.
CatalogReport verify_catalog(const Catalog &catalog, std::string_view scope = "all");

/// Every entry's checks in order, serially.
std::vector<CheckResult> verify_entry(const Catalog &catalog, const CatalogEntry &e);

} // namespace fratio
