#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "kintrace/pedigree.hpp"

namespace kintrace {

struct GenConfig {
  std::uint32_t generations = 7;
  /// Children per couple. 2..5 is the supported experiment range; 1 is a
  /// degenerate chain and must be enabled explicitly.
  std::uint32_t offspring = 2;
  std::uint32_t families = 1;
  std::uint64_t seed = 42;
  Date reference_date{std::chrono::year{2020}, std::chrono::month{1},
                      std::chrono::day{1}};
  bool allow_degenerate = false;
};

struct CoupleRecord {
  PersonId husband{1};
  PersonId wife{1};
  std::vector<PersonId> children;  // empty for last-generation couples
};

/// Exact description of a generated pedigree, kept alongside the graph so
/// that tests can cross-check structure without re-deriving it.
struct GenLedger {
  std::vector<std::pair<PersonId, PersonId>> family_founders;
  std::unordered_map<PersonId, std::uint32_t> generation;  // 1-based
  std::vector<CoupleRecord> couples;
  std::unordered_map<PersonId, PersonId> spouse_of;
  /// Persons created as spouses for a blood member; they carry no parents.
  std::unordered_set<PersonId> married_in;
  std::vector<PersonId> persons;  // graph insertion order
};

struct GeneratedPedigree {
  PedigreeGraph graph;
  GenLedger ledger;
};

/// Builds `families` independent family trees: a founder couple per family,
/// every couple in generations 1..G-1 raising `offspring` children of
/// uniformly random sex, and every child paired with a freshly generated
/// spouse who brings no parents of their own. Sons keep the father's
/// surname, daughters take their generated husband's. Deterministic for a
/// fixed seed. Throws ConfigError on invalid configuration.
GeneratedPedigree generate(const GenConfig& config);

/// Closed-form person count of one generated family: 2 * (V^G - 1) / (V - 1)
/// for V >= 2, and 2 * G for the degenerate V == 1. Throws ConfigError when
/// the count does not fit in 64 bits.
std::uint64_t population(std::uint32_t generations, std::uint32_t offspring);

/// n unordered pairs of distinct persons, drawn uniformly (pairs may repeat
/// and may span families) and deterministically for a fixed seed. Throws
/// InsufficientPopulationError when the pedigree holds fewer than 2 persons.
std::vector<std::pair<PersonId, PersonId>> sample_pairs(
    const PedigreeGraph& graph, const GenLedger& ledger, std::size_t n,
    std::uint64_t seed);

}  // namespace kintrace
