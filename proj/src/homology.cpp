#include "descent_poset/homology.hpp"

#include <algorithm>
#include <iterator>
#include <unordered_map>

namespace descent_poset {

std::size_t gf2_rank(std::vector<Gf2Column> columns) {
  std::unordered_map<std::uint32_t, std::size_t> pivot_owner;
  pivot_owner.reserve(columns.size());
  std::size_t rank = 0;
  Gf2Column scratch;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    auto& col = columns[c];
    while (!col.empty()) {
      auto it = pivot_owner.find(col.back());
      if (it == pivot_owner.end()) break;
      const auto& other = columns[it->second];
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(scratch));
      col.swap(scratch);
    }
    if (!col.empty()) {
      pivot_owner.emplace(col.back(), c);
      ++rank;
    }
  }
  return rank;
}

}  // namespace descent_poset
