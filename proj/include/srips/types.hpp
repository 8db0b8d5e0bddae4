#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace srips {

using Index = std::uint32_t;

// Sorted, duplicate-free list of point indices.
using IndexSet = std::vector<Index>;

// Sorted, duplicate-free vertex list of a simplex.
using Simplex = std::vector<Index>;

// Thrown when input data violates a structural invariant (asymmetric matrix,
// broken triangle inequality, non-face-closed complex, ...). Carries the
// offending indices so callers can report them.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what, std::vector<Index> witness = {})
      : std::invalid_argument(what), witness_(std::move(witness)) {}

  const std::vector<Index>& witness() const noexcept { return witness_; }

 private:
  std::vector<Index> witness_;
};

// Thrown when an operation is called outside its domain (r <= 0, empty set, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or unreadable input. Distinct from ValidationError, which reports
// well-formed input describing an invalid object.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

IndexSet normalized(IndexSet set);
IndexSet iota_set(std::size_t n);
bool is_subset(std::span<const Index> sub, std::span<const Index> super);
IndexSet set_union(std::span<const Index> a, std::span<const Index> b);
IndexSet set_intersection(std::span<const Index> a, std::span<const Index> b);
IndexSet set_difference(std::span<const Index> a, std::span<const Index> b);
bool contains(std::span<const Index> set, Index value);

// Per-point membership mask over a fixed index range; the working set of the
// crushing routines.
class LiveSet {
 public:
  LiveSet() = default;
  LiveSet(std::size_t universe, bool all_live);
  LiveSet(std::size_t universe, std::span<const Index> members);

  std::size_t universe() const noexcept { return flags_.size(); }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  bool contains(Index i) const noexcept { return i < flags_.size() && flags_[i] != 0; }

  void insert(Index i);
  void erase(Index i);

  IndexSet members() const;

 private:
  std::vector<std::uint8_t> flags_;
  std::size_t count_ = 0;
};

}  // namespace srips
