#include "descent_poset/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "descent_poset/errors.hpp"

namespace descent_poset {

std::vector<Permutation> all_permutations(int n) {
  if (n < 1) throw PreconditionError("permutation length must be >= 1");
  std::vector<int> buf(static_cast<std::size_t>(n));
  std::iota(buf.begin(), buf.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(buf);
  } while (std::next_permutation(buf.begin(), buf.end()));
  return out;
}

std::vector<Permutation> permutations_with_descents(int n, int k) {
  if (n < 1 || k < 0 || k >= n)
    throw PreconditionError("need n >= 1 and 0 <= k < n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  std::vector<int> buf(static_cast<std::size_t>(n));
  std::iota(buf.begin(), buf.end(), 1);
  std::vector<Permutation> out;
  do {
    int d = 0;
    for (std::size_t i = 0; i + 1 < buf.size(); ++i) d += buf[i] > buf[i + 1] ? 1 : 0;
    if (d == k) out.emplace_back(buf);
  } while (std::next_permutation(buf.begin(), buf.end()));
  return out;
}

namespace {

Permutation interleave(int n, int first_parity) {
  if (n < 1) throw PreconditionError("length must be >= 1");
  std::vector<int> out;
  for (int v = 1; v <= n; ++v)
    if (v % 2 == first_parity) out.push_back(v);
  for (int v = 1; v <= n; ++v)
    if (v % 2 != first_parity) out.push_back(v);
  return Permutation(std::move(out));
}

}  // namespace

Permutation m_permutation(int n) { return interleave(n, 0); }
Permutation w_permutation(int n) { return interleave(n, 1); }

}  // namespace descent_poset
