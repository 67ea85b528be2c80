#include "descent_poset/bijection.hpp"

#include "descent_poset/errors.hpp"

namespace descent_poset {

Word perm_to_word(const Permutation& pi) {
  std::vector<int> out(pi.size());
  int run = 1;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i > 0 && pi.letters()[i - 1] > pi.letters()[i]) ++run;
    out[static_cast<std::size_t>(pi.letters()[i] - 1)] = run;
  }
  return Word(std::move(out));
}

Permutation word_to_perm(const Word& w) {
  if (!is_ahat_member(w)) throw PreconditionError("word " + w.to_string() + " violates AC1/AC2");
  std::vector<int> out;
  out.reserve(w.size());
  for (int j = 1; j <= w.max_letter(); ++j)
    for (std::size_t pos : positions(w, j)) out.push_back(static_cast<int>(pos));
  return Permutation(std::move(out));
}

}  // namespace descent_poset
