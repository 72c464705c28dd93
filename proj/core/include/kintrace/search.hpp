#pragma once

#include <cstdint>
#include <vector>

#include "kintrace/pedigree.hpp"

namespace kintrace {

enum class Algorithm : std::uint8_t { PBBA, BidirectionalBFS, PlainBFS };

const char* algorithm_name(Algorithm a);

struct SearchStats {
  Algorithm algorithm = Algorithm::PBBA;
  /// Nodes inserted into a search frontier, the two query subjects excluded.
  /// A node reached independently from both sides counts once per side.
  std::uint64_t nodes_expanded = 0;
  /// Completed expansion levels at termination.
  std::uint32_t levels_used = 0;
};

/// Upward path from a start person to the intersection node, both inclusive.
/// Consecutive entries are child -> parent arcs.
struct Route {
  std::vector<PersonId> steps;

  std::size_t generations() const { return steps.empty() ? 0 : steps.size() - 1; }
};

struct SearchResult {
  bool related = false;
  /// Common ancestors at minimal combined depth, ascending by id. The first
  /// entry is the canonical intersection used for the routes.
  std::vector<PersonId> intersections;
  Route route_a;
  Route route_b;
  SearchStats stats;
};

/// Parent-direction bidirectional breadth search. Both subjects expand one
/// ancestor level per round (first side a, then side b); a node held by both
/// sides is an intersection. The round in which the first intersection
/// appears is completed on both sides before the result is assembled, so
/// same-level co-ancestors (e.g. both parents of two siblings) are reported
/// together.
SearchResult pbba_search(const PedigreeGraph& graph, PersonId p1, PersonId p2,
                         std::uint32_t l_max = 10);

/// Baseline: both sides expand over parent and child arcs alike. Meeting
/// points are mapped back to a common ancestor by locating the apex of the
/// connecting path; meetings whose path has no apex (affinal contacts such
/// as spouses reached through a shared child) do not count as blood
/// relationships and the search keeps going.
SearchResult bidi_bfs_search(const PedigreeGraph& graph, PersonId p1,
                             PersonId p2, std::uint32_t l_max = 10);

/// Baseline: single-source breadth search from p1 over ancestor-then-
/// descendant paths until p2 is found or depth_limit levels are exhausted.
/// Callers mirroring the two-sided searches pass depth_limit = 2 * l_max.
SearchResult plain_bfs_search(const PedigreeGraph& graph, PersonId p1,
                              PersonId p2, std::uint32_t depth_limit = 20);

struct LcaResult {
  /// All common ancestors of minimal combined depth, ascending by id.
  std::vector<PersonId> intersections;
  /// Upward distances of the canonical (lowest-id) intersection; zero when
  /// intersections is empty.
  std::uint32_t d_a = 0;
  std::uint32_t d_b = 0;
};

/// Exhaustive reference: computes complete ancestor sets of both persons
/// (minimal depths), intersects them, and keeps the apexes of minimal
/// combined depth. Independent of the frontier searches above; intended for
/// verification.
LcaResult lca_oracle(const PedigreeGraph& graph, PersonId p1, PersonId p2);

}  // namespace kintrace
