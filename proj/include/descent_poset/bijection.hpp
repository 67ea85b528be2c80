#pragma once

#include "descent_poset/permutation.hpp"
#include "descent_poset/word.hpp"

namespace descent_poset {

// pi -> d_pi(1) d_pi(2) ... d_pi(n): letter c of the word is the run index
// of value c in pi. A permutation with k descents maps to a word with
// max letter k + 1 satisfying AC1/AC2.
Word perm_to_word(const Permutation& pi);

// w -> positions of 1, then positions of 2, ..., each block increasing.
// Inverse of perm_to_word. Throws PreconditionError unless w is in the
// AC1/AC2 class.
Permutation word_to_perm(const Word& w);

}  // namespace descent_poset
