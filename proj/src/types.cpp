#include "srips/types.hpp"

#include <algorithm>
#include <numeric>

namespace srips {

IndexSet normalized(IndexSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

IndexSet iota_set(std::size_t n) {
  IndexSet out(n);
  std::iota(out.begin(), out.end(), Index{0});
  return out;
}

bool is_subset(std::span<const Index> sub, std::span<const Index> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

IndexSet set_union(std::span<const Index> a, std::span<const Index> b) {
  IndexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_intersection(std::span<const Index> a, std::span<const Index> b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_difference(std::span<const Index> a, std::span<const Index> b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(std::span<const Index> set, Index value) {
  return std::binary_search(set.begin(), set.end(), value);
}

LiveSet::LiveSet(std::size_t universe, bool all_live)
    : flags_(universe, all_live ? 1 : 0), count_(all_live ? universe : 0) {}

LiveSet::LiveSet(std::size_t universe, std::span<const Index> members) : flags_(universe, 0) {
  for (Index i : members) {
    if (i >= universe) throw PreconditionError("live set member out of range");
    insert(i);
  }
}

void LiveSet::insert(Index i) {
  if (!flags_[i]) {
    flags_[i] = 1;
    ++count_;
  }
}

void LiveSet::erase(Index i) {
  if (flags_[i]) {
    flags_[i] = 0;
    --count_;
  }
}

IndexSet LiveSet::members() const {
  IndexSet out;
  out.reserve(count_);
  for (std::size_t i = 0; i < flags_.size(); ++i)
    if (flags_[i]) out.push_back(static_cast<Index>(i));
  return out;
}

}  // namespace srips
