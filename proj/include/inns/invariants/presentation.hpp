#ifndef INNS_INVARIANTS_PRESENTATION_HPP
#define INNS_INVARIANTS_PRESENTATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inns/branch/branch.hpp"
#include "inns/kernel/ideal.hpp"

namespace inns::invariants {

using kernel::Ideal;
using kernel::Polynomial;
using kernel::RingPtr;

/// Irreducible component (X_i, 0) given by its prime ideal P_i.
struct ComponentPresentation {
  std::string name;
  Ideal prime;
  int dimension = 1;
  std::vector<branch::Branch> branches;
  std::optional<std::int64_t> declared_delta;
  // Number of branches r_i; needed for singular planar components whose
  // tangent cone does not decide it.
  std::optional<std::int64_t> declared_branch_count;
  std::optional<bool> declared_smooth;
};

/// Germ given by I = P_1 cap ... cap P_r cap Q. Either Q or I may be
/// omitted; with neither the germ is the reduced union of the components.
struct InnsPresentation {
  RingPtr ring;
  std::vector<ComponentPresentation> components;
  std::optional<Ideal> embedded;
  std::optional<Ideal> full;
};

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerificationRecord {
  std::vector<Check> checks;
  bool ok() const;
  // First failing check, for error messages.
  std::string first_failure() const;
};

class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(VerificationRecord record);
  const VerificationRecord& record() const { return record_; }

 private:
  VerificationRecord record_;
};

/// Raised when a component's delta cannot be determined from the data.
class UnderdeterminedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when two independent computations of one quantity disagree.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// True iff every generator of `ideal` vanishes on the branch up to its
/// precision. Branch components are matched to ring variables by position.
bool branch_lies_on(const branch::Branch& b, const Ideal& ideal);

VerificationRecord verify_decomposition(const InnsPresentation& p);

}  // namespace inns::invariants

#endif  // INNS_INVARIANTS_PRESENTATION_HPP
