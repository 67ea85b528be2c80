#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace descent_poset {

// A sparse column over GF(2): ascending row indices of its nonzero entries.
using Gf2Column = std::vector<std::uint32_t>;

// Rank over GF(2) of the matrix with the given columns, by the standard
// column reduction keyed on each column's lowest (largest-index) entry.
// The columns are consumed.
std::size_t gf2_rank(std::vector<Gf2Column> columns);

}  // namespace descent_poset
