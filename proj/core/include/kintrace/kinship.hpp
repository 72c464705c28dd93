#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kintrace/pedigree.hpp"
#include "kintrace/search.hpp"

namespace kintrace {

struct KinshipInput {
  /// Generations from person a up to the canonical intersection.
  std::uint32_t d_a = 0;
  /// Same for person b.
  std::uint32_t d_b = 0;
  Sex sex_a = Sex::Male;
  Sex sex_b = Sex::Male;
  /// 1 or 2; only consulted for the sibling case d_a == d_b == 1.
  int shared_parents = 2;
};

struct KinshipTerm {
  /// Direct ancestor line (min(d_a, d_b) == 0) as opposed to collateral.
  bool lineal = false;
  /// a's role relative to b ("aunt" in "a is the aunt of b").
  std::string term_for_a;
  /// b's role relative to a.
  std::string term_for_b;
  /// Cousin degree (min - 1); set only for cousin terms.
  std::optional<int> degree;
  /// Generations of offset |d_a - d_b|; set only for cousin terms.
  std::optional<int> removed;

  bool operator==(const KinshipTerm&) const = default;
};

/// Maps generation distances and sexes to the English relationship name.
/// Total and pure: every valid input has exactly one answer.
KinshipTerm classify(const KinshipInput& input);

struct NotRelatedError : Error {
  NotRelatedError();
};

struct NamedRelationship {
  KinshipTerm term;
  std::string sentence;
};

/// Names the relationship held in a successful search result: derives the
/// generation distances from the routes, the sexes from the graph, and the
/// shared-parent count from the subjects' parent links, then renders
/// "<a> is the <term> of <b>." Throws NotRelatedError when result.related
/// is false.
NamedRelationship name_relationship(const SearchResult& result,
                                    const PedigreeGraph& graph);

}  // namespace kintrace
