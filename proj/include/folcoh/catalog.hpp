#pragma once

#include <string>
#include <variant>
#include <vector>

#include "folcoh/groups.hpp"
#include "folcoh/lie_algebra.hpp"
#include "folcoh/tischler.hpp"

namespace folcoh {
namespace catalog {

/// A documented result for an entry: the quantity name is understood by
/// evaluate_expected, the value is its canonical text form, and the source
/// says where the number comes from (worked_example for values taken from a
/// written-up computation, definition for values forced by a definition,
/// independent_oracle for values established by a second code path).
struct ExpectedValue {
  std::string quantity;
  std::string value;
  std::string source;
};

using Payload = std::variant<LieAlgebra, ReductivePair, FiniteGroup, FoliationProfile>;

struct CatalogEntry {
  std::string name;
  std::string summary;
  Payload payload;
  std::vector<ExpectedValue> expected;
};

/// Published entry names, in catalog order.
std::vector<std::string> list();

/// Returns the entry after validating its payload.
/// Throws ValidationError kind UnknownName for unlisted names.
CatalogEntry get(const std::string& name);

/// Recomputes one documented quantity for the entry's payload.
/// Throws Error for quantities the evaluator does not know.
std::string evaluate_expected(const CatalogEntry& entry, const std::string& quantity);

} // namespace catalog
} // namespace folcoh
