#pragma once

#include "surfsing/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace surfsing {

/// Invariants of one fiber X_t of a family. The record labelled "0" is the
/// special fiber.
struct FiberRecord {
  std::string label;
  std::uint64_t m = 1;    // multiplicity m(X_t, 0)
  std::uint64_t mu2 = 0;  // Milnor number of a generic hyperplane section
  std::optional<Rational> khat2;  // Nash bundle self-intersection
  std::optional<Rational> k2;     // K^2 of the minimal resolution
  std::optional<std::int64_t> chiE;
  std::optional<std::int64_t> chiX;
  std::optional<std::int64_t> chiXtilde;
  std::vector<Rational> e_values;  // e(J_1(t)) samples

  bool is_special() const noexcept { return label == kSpecialLabel; }
  static constexpr const char* kSpecialLabel = "0";
};

using Family = std::vector<FiberRecord>;

/// Throws DomainError unless labels are unique, exactly one record is the
/// special fiber and m >= 1.
void validate_family(const Family& family);

struct InvariantVerdict {
  std::string name;
  bool constant = true;
  /// Labels whose value differs from the generic one, special fiber first.
  std::vector<std::string> offending;
};

enum class Criterion { NashFiberDimension, WhitneyRegularity };

struct EquisingularityReport {
  Criterion criterion;
  std::string theorem;
  std::vector<InvariantVerdict> invariants;
  bool verdict = false;
  /// Statements the criterion guarantees; empty unless `verdict`.
  std::vector<std::string> consequences;

  std::vector<std::string> failed() const;
};

/// Equisingularity via fiber dimension of the relative Nash transformation:
/// positive iff m, mu2 and khat2 are constant.
EquisingularityReport check_nash_criterion(const Family& family);

/// Whitney regularity: positive iff k2, chiE, mu2 and m are constant.
EquisingularityReport check_whitney_criterion(const Family& family);

struct SemicontinuityResult {
  bool passed = true;
  std::size_t index = 0;
  Rational special_value;
  /// Labels t with e(J_1(t)) > e(J_1(0)).
  std::vector<std::string> violations;
  std::string message;
};

/// e(J_1(t)) <= e(J_1(0)) for every t. Uses the `index`-th e-value of each
/// record; a violation means the input data is inconsistent.
SemicontinuityResult check_semicontinuity(const Family& family, std::size_t index = 0);

/// Eu(X_t, 0) = 1 - mu2.
std::int64_t euler_obstruction(std::uint64_t mu2);

struct ChiRelationResult {
  bool passed = false;
  /// chi(X_t) = 1, expected when chi(E_t) is constant in a regular family.
  bool chi_is_one = false;
  std::string message;
};

/// chi(X_t) = chi(X~_t) - chi(E_t) + 1. Throws DomainError when a field is
/// missing.
ChiRelationResult check_chi_relation(const FiberRecord& record);

} // namespace surfsing
