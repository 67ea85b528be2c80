#pragma once

#include <vector>

#include "descent_poset/permutation.hpp"

namespace descent_poset {

// All permutations of length n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

// All permutations of length n with exactly k descents, lexicographic.
// Throws PreconditionError unless n >= 1 and 0 <= k < n.
std::vector<Permutation> permutations_with_descents(int n, int k);

// The adjacency-free one-descent permutations: M_n = 2 4 6 ... 1 3 5 ...
// and W_n = 1 3 5 ... 2 4 6 ...
Permutation m_permutation(int n);
Permutation w_permutation(int n);

}  // namespace descent_poset
