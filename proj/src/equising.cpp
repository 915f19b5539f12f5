#include "surfsing/equising.hpp"
#include "surfsing/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace surfsing {

void validate_family(const Family& family) {
  std::set<std::string> labels;
  std::size_t special = 0;
  for (const FiberRecord& r : family) {
    if (r.label.empty()) throw DomainError("fiber with an empty label");
    if (!labels.insert(r.label).second) throw DomainError("duplicate fiber label '" + r.label + "'");
    if (r.is_special()) ++special;
    if (r.m < 1) throw DomainError("fiber t=" + r.label + ": multiplicity m must be >= 1");
  }
  if (special != 1)
    throw DomainError(special == 0 ? "no special fiber (label t=0) in the family"
                                   : "more than one special fiber");
}

namespace {

bool label_before(const std::string& lhs, const std::string& rhs) {
  const bool ls = lhs == FiberRecord::kSpecialLabel, rs = rhs == FiberRecord::kSpecialLabel;
  if (ls != rs) return ls;
  return lhs < rhs;
}

// The reference value is the most common one among non-special fibers
// (ties: the special fiber's value if it is tied, else the smallest). With
// no other fibers it is the special fiber's value. Everything else offends.
template <typename T>
InvariantVerdict constancy(const std::string& name, const Family& family,
                           const std::function<T(const FiberRecord&)>& get) {
  std::map<T, std::size_t> counts;
  const FiberRecord* special = nullptr;
  for (const FiberRecord& r : family) {
    if (r.is_special()) special = &r;
    else ++counts[get(r)];
  }
  T reference = get(*special);
  if (!counts.empty()) {
    std::size_t best = 0;
    for (const auto& [value, count] : counts) best = std::max(best, count);
    const auto at_special = counts.find(reference);
    if (at_special == counts.end() || at_special->second != best) {
      for (const auto& [value, count] : counts)
        if (count == best) {
          reference = value;
          break;
        }
    }
  }
  InvariantVerdict verdict{name, true, {}};
  for (const FiberRecord& r : family)
    if (get(r) != reference) verdict.offending.push_back(r.label);
  std::sort(verdict.offending.begin(), verdict.offending.end(), label_before);
  verdict.constant = verdict.offending.empty();
  return verdict;
}

template <typename T>
std::function<T(const FiberRecord&)> require(const std::optional<T> FiberRecord::*field,
                                             const std::string& name) {
  return [field, name](const FiberRecord& r) -> T {
    if (!(r.*field)) throw DomainError("fiber t=" + r.label + " is missing required field " + name);
    return *(r.*field);
  };
}

void finish(EquisingularityReport& report) {
  report.verdict = std::all_of(report.invariants.begin(), report.invariants.end(),
                               [](const InvariantVerdict& v) { return v.constant; });
  if (!report.verdict) report.consequences.clear();
}

// Missing fields are reported before any verdict is formed.
template <typename T>
void require_all(const Family& family, const std::optional<T> FiberRecord::*field,
                 const std::string& name) {
  const auto get = require(field, name);
  for (const FiberRecord& r : family) get(r);
}

} // namespace

std::vector<std::string> EquisingularityReport::failed() const {
  std::vector<std::string> names;
  for (const InvariantVerdict& v : invariants)
    if (!v.constant) names.push_back(v.name);
  return names;
}

EquisingularityReport check_nash_criterion(const Family& family) {
  validate_family(family);
  require_all(family, &FiberRecord::khat2, "khat2");

  EquisingularityReport report;
  report.criterion = Criterion::NashFiberDimension;
  report.theorem = "Nash equisingularity criterion: m, mu2 and Khat^2 constant along C";
  report.invariants.push_back(constancy<std::uint64_t>("m", family, [](const FiberRecord& r) { return r.m; }));
  report.invariants.push_back(
      constancy<std::uint64_t>("mu2", family, [](const FiberRecord& r) { return r.mu2; }));
  report.invariants.push_back(constancy<Rational>("khat2", family, require(&FiberRecord::khat2, "khat2")));
  report.consequences = {
      "(a1) the relative Nash transformation of X has fiber dimension <= 1",
      "(a2) the relative Nash transformation of the generic hyperplane section X_H has fiber dimension 0",
      "(a3) the multiplicity of the fibers of X_H (and of X) is constant along C",
  };
  finish(report);
  return report;
}

EquisingularityReport check_whitney_criterion(const Family& family) {
  validate_family(family);
  require_all(family, &FiberRecord::k2, "k2");
  require_all(family, &FiberRecord::chiE, "chiE");

  EquisingularityReport report;
  report.criterion = Criterion::WhitneyRegularity;
  report.theorem = "Whitney regularity criterion: K^2, chi(E), mu2 and m constant along C";
  report.invariants.push_back(constancy<Rational>("k2", family, require(&FiberRecord::k2, "k2")));
  report.invariants.push_back(
      constancy<std::int64_t>("chiE", family, require(&FiberRecord::chiE, "chiE")));
  report.invariants.push_back(
      constancy<std::uint64_t>("mu2", family, [](const FiberRecord& r) { return r.mu2; }));
  report.invariants.push_back(constancy<std::uint64_t>("m", family, [](const FiberRecord& r) { return r.m; }));
  report.consequences = {
      "X is Whitney regular along C = {0} x D",
      "X admits a very weak simultaneous resolution after finite base change "
      "(external citation: Kollar / Shepherd-Barron)",
  };
  finish(report);
  return report;
}

SemicontinuityResult check_semicontinuity(const Family& family, std::size_t index) {
  validate_family(family);
  for (const FiberRecord& r : family)
    if (r.e_values.size() <= index)
      throw DomainError("fiber t=" + r.label + " has no e-value at index " + std::to_string(index));

  SemicontinuityResult result;
  result.index = index;
  const auto special =
      std::find_if(family.begin(), family.end(), [](const FiberRecord& r) { return r.is_special(); });
  result.special_value = special->e_values[index];
  for (const FiberRecord& r : family)
    if (!r.is_special() && r.e_values[index] > result.special_value) result.violations.push_back(r.label);
  std::sort(result.violations.begin(), result.violations.end());
  result.passed = result.violations.empty();
  if (result.passed) {
    result.message = family.size() == 1 ? "only the special fiber is present; nothing to compare"
                                        : "e(J1(t)) <= e(J1(0)) for every fiber";
  } else {
    result.message = "inconsistent input data: semicontinuity e(J1(t)) <= e(J1(0)) fails for t = ";
    for (std::size_t k = 0; k < result.violations.size(); ++k)
      result.message += (k ? "," : "") + result.violations[k];
  }
  return result;
}

std::int64_t euler_obstruction(std::uint64_t mu2) { return 1 - static_cast<std::int64_t>(mu2); }

ChiRelationResult check_chi_relation(const FiberRecord& record) {
  for (const auto& [field, name] : {std::pair{&FiberRecord::chiX, "chiX"},
                                    std::pair{&FiberRecord::chiXtilde, "chiXtilde"},
                                    std::pair{&FiberRecord::chiE, "chiE"}})
    if (!(record.*field))
      throw DomainError("fiber t=" + record.label + " is missing required field " + name);

  ChiRelationResult result;
  const std::int64_t expected = *record.chiXtilde - *record.chiE + 1;
  result.passed = *record.chiX == expected;
  result.chi_is_one = *record.chiX == 1;
  result.message = result.passed
                       ? "chi(X) = chi(Xtilde) - chi(E) + 1 holds"
                       : "chi(X) = " + std::to_string(*record.chiX) + " but chi(Xtilde) - chi(E) + 1 = " +
                             std::to_string(expected);
  return result;
}

} // namespace surfsing
