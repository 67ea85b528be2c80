#include "descent_poset/interval.hpp"

#include <algorithm>
#include <unordered_set>

#include "descent_poset/errors.hpp"

namespace descent_poset {

Interval Interval::build(const Permutation& bottom, const Permutation& top, std::size_t max_top_length) {
  if (top.size() > max_top_length)
    throw PreconditionError("interval top has length " + std::to_string(top.size()) + ", above the size guard of " +
                            std::to_string(max_top_length));
  if (bottom.size() > top.size())
    throw PreconditionError(bottom.to_string() + " is not contained in " + top.to_string());

  // levels[d] holds the down-set elements of length |top| - d, with the
  // deletion children of each element.
  struct Node {
    Permutation perm;
    std::vector<std::size_t> children;  // indices into the next level
    bool good = false;
  };
  const std::size_t depth = top.size() - bottom.size();
  std::vector<std::vector<Node>> levels(depth + 1);
  levels[0].push_back({top, {}, false});
  for (std::size_t d = 0; d < depth; ++d) {
    std::unordered_map<Permutation, std::size_t> seen;
    for (auto& node : levels[d]) {
      for (auto& child : deletions(node.perm)) {
        auto [it, inserted] = seen.try_emplace(child, levels[d + 1].size());
        if (inserted) levels[d + 1].push_back({std::move(child), {}, false});
        node.children.push_back(it->second);
      }
    }
  }

  bool found = false;
  for (auto& node : levels[depth]) {
    node.good = node.perm == bottom;
    found = found || node.good;
  }
  if (!found) throw PreconditionError(bottom.to_string() + " is not contained in " + top.to_string());
  for (std::size_t d = depth; d-- > 0;)
    for (auto& node : levels[d])
      node.good = std::any_of(node.children.begin(), node.children.end(),
                              [&](std::size_t c) { return levels[d + 1][c].good; });

  Interval out;
  for (const auto& level : levels)
    for (const auto& node : level)
      if (node.good) out.elements_.push_back(node.perm);
  out.index_elements();

  out.lower_.assign(out.size(), {});
  out.upper_.assign(out.size(), {});
  for (std::size_t d = 0; d < depth; ++d) {
    for (const auto& node : levels[d]) {
      if (!node.good) continue;
      const std::size_t hi = out.index_.at(node.perm);
      for (std::size_t c : node.children) {
        const auto& child = levels[d + 1][c];
        if (!child.good) continue;
        const std::size_t lo = out.index_.at(child.perm);
        out.lower_[hi].push_back(lo);
        out.upper_[lo].push_back(hi);
      }
    }
  }
  out.close_relations();
  return out;
}

void Interval::index_elements() {
  std::sort(elements_.begin(), elements_.end());
  index_.clear();
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

void Interval::close_relations() {
  for (auto& v : lower_) std::sort(v.begin(), v.end());
  for (auto& v : upper_) std::sort(v.begin(), v.end());
  const std::size_t n = size();
  below_.assign(n, Bits(n));
  above_.assign(n, Bits(n));
  // Index order is a linear extension, so one pass in each direction suffices.
  for (std::size_t i = 0; i < n; ++i) {
    below_[i].set(i);
    for (std::size_t c : lower_[i]) below_[i] |= below_[c];
  }
  for (std::size_t i = n; i-- > 0;) {
    above_[i].set(i);
    for (std::size_t c : upper_[i]) above_[i] |= above_[c];
  }
}

std::optional<std::size_t> Interval::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Interval Interval::subinterval(std::size_t i, std::size_t j) const {
  if (!leq(i, j))
    throw PreconditionError(element(i).to_string() + " is not contained in " + element(j).to_string());
  const Bits members = above_[i] & below_[j];
  std::vector<std::size_t> remap(size(), size());
  Interval out;
  for (std::size_t k = members.find_first(); k != Bits::npos; k = members.find_next(k)) {
    remap[k] = out.elements_.size();
    out.elements_.push_back(elements_[k]);
  }
  out.index_elements();  // already sorted; builds the lookup table
  out.lower_.assign(out.size(), {});
  out.upper_.assign(out.size(), {});
  for (std::size_t k = members.find_first(); k != Bits::npos; k = members.find_next(k)) {
    for (std::size_t c : lower_[k]) {
      if (remap[c] == size()) continue;
      out.lower_[remap[k]].push_back(remap[c]);
      out.upper_[remap[c]].push_back(remap[k]);
    }
  }
  out.close_relations();
  return out;
}

}  // namespace descent_poset
