#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace srips {

// r~ = (r_1, r_2, ...) stored as a non-increasing positive prefix whose last
// entry repeats forever.
class ScaleSequence {
 public:
  explicit ScaleSequence(std::vector<double> prefix);
  static ScaleSequence constant(double r);
  // Comma-separated, last entry is the tail: "0.6,0.4".
  static ScaleSequence parse(std::string_view text);

  // r(i) for i >= 1.
  double operator()(std::size_t i) const noexcept {
    return i <= prefix_.size() ? prefix_[i - 1] : prefix_.back();
  }
  double r_inf() const noexcept { return prefix_.back(); }
  double first() const noexcept { return prefix_.front(); }
  const std::vector<double>& prefix() const noexcept { return prefix_; }
  bool is_constant() const noexcept { return prefix_.front() == prefix_.back(); }

  // Distinct values of prefix plus tail, descending.
  std::vector<double> distinct_values() const;

  // alpha > r~ iff alpha > r_1; r~ > beta iff r_inf > beta.
  bool lies_below(double alpha) const noexcept { return alpha > first(); }
  bool lies_above(double beta) const noexcept { return r_inf() > beta; }

  ScaleSequence scaled(double t) const;
  // r(i) <= other(i) for every i.
  bool entrywise_le(const ScaleSequence& other) const noexcept;

  std::string to_string() const;

  friend bool operator==(const ScaleSequence&, const ScaleSequence&) = default;

 private:
  std::vector<double> prefix_;
};

}  // namespace srips
