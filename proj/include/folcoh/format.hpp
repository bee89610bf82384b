#pragma once

#include <string>
#include <vector>

#include "folcoh/groups.hpp"
#include "folcoh/lie_algebra.hpp"
#include "folcoh/tischler.hpp"

namespace folcoh {

/// Parsed payloads of one text document, grouped by kind in input order.
/// Payload names are unique across the whole document.
struct Document {
  std::vector<LieAlgebra> algebras;
  std::vector<ReductivePair> pairs;
  std::vector<FiniteGroup> groups;
  std::vector<FoliationProfile> profiles;

  bool operator==(const Document&) const = default;
};

/// Line-oriented text format. `#` starts a comment, tokens are whitespace
/// separated, vectors and matrix rows are parenthesized groups of rationals.
///
///   algebra <name>
///   dim <n>
///   basis <names...>
///   bracket <a> <b> = <coeff> <basis> [+ <coeff> <basis>]...
///   subalgebra <basis names, or (vectors)>        # makes the payload a pair
///   complement (v1) (v2) ...                      # optional, else solved for
///   generator (row1) (row2) ...                   # repeatable
///
///   group <name>
///   order <N>
///   table <N entries>                             # one line per element
///   action (row1) (row2) ...                      # optional, one per element
///
///   profile <name>
///   <flag> = true|false                           # the seven profile flags
///   periods
///   constants <names...>
///   note <constant> = <free text>
///   period = <coeff>*<constant> [+ ...]
///
/// Throws ParseError with the 1-based line number; building a pair without an
/// explicit complement may forward ValidationError from the solver.
Document parse_document(const std::string& text);

std::string serialize(const LieAlgebra& g);
std::string serialize(const ReductivePair& pair);
std::string serialize(const FiniteGroup& g);
std::string serialize(const FoliationProfile& profile);

/// Canonical document text: algebras, pairs, groups, profiles, blank-line
/// separated. parse_document(serialize(doc)) == doc.
std::string serialize(const Document& doc);

} // namespace folcoh
