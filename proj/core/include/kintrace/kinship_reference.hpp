#pragma once

#include <cstdint>
#include <string>

#include "kintrace/pedigree.hpp"

namespace kintrace {

/// Reference kinship table, written as literal word lists independently of
/// classify() so the two can be cross-checked against each other. Returns
/// the role of the first person relative to the second, e.g. "grand-uncle"
/// for (1, 3, Male). Covers generation distances up to 8 on either side.
std::string reference_kinship_term(std::uint32_t d_self, std::uint32_t d_other,
                                   Sex sex_self, int shared_parents = 2);

}  // namespace kintrace
