#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kintrace {

using BigInt = boost::multiprecision::cpp_int;

/// Worst-case node totals for finding a relationship whose intersection sits
/// L parent levels above both subjects, fan-out V children per couple. The
/// counts model duplication-free tree expansion, not deduplicated traversal.
struct CostRow {
  std::uint32_t level = 0;
  BigInt bfs_nodes;
  BigInt bidi_nodes;
  BigInt pbba_nodes;
};

/// Single-source search over parent and child arcs must descend 2L levels:
/// sum_{l=1..2L} (2+V)^l.
BigInt bfs_count(std::uint32_t level, std::uint32_t offspring);

/// Two concurrent sources, still over all arcs: 2 * sum_{l=1..L} (2+V)^l.
BigInt bidi_count(std::uint32_t level, std::uint32_t offspring);

/// Two sources restricted to parent arcs: 2 * sum_{l=1..L} 2^l = 2^(L+2) - 4.
BigInt pbba_count(std::uint32_t level);

/// Rows for levels 1..max_level. Exact integer arithmetic throughout.
std::vector<CostRow> table1(std::uint32_t max_level, std::uint32_t offspring);

}  // namespace kintrace
