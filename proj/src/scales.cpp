#include "srips/scales.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "srips/types.hpp"

namespace srips {

ScaleSequence::ScaleSequence(std::vector<double> prefix) : prefix_(std::move(prefix)) {
  if (prefix_.empty()) throw PreconditionError("scale sequence needs at least one value");
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (!(prefix_[i] > 0.0) || !std::isfinite(prefix_[i]))
      throw PreconditionError("scales must be finite and positive");
    if (i > 0 && prefix_[i] > prefix_[i - 1])
      throw PreconditionError("scales must be non-increasing");
  }
}

ScaleSequence ScaleSequence::constant(double r) { return ScaleSequence({r}); }

ScaleSequence ScaleSequence::parse(std::string_view text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("cannot parse scale '" + std::string(token) + "'");
    values.push_back(v);
    pos = comma + 1;
  }
  return ScaleSequence(std::move(values));
}

std::vector<double> ScaleSequence::distinct_values() const {
  std::vector<double> out;
  for (double r : prefix_)
    if (out.empty() || out.back() != r) out.push_back(r);
  return out;
}

ScaleSequence ScaleSequence::scaled(double t) const {
  std::vector<double> p = prefix_;
  for (double& r : p) r *= t;
  return ScaleSequence(std::move(p));
}

bool ScaleSequence::entrywise_le(const ScaleSequence& other) const noexcept {
  const std::size_t k = std::max(prefix_.size(), other.prefix_.size());
  for (std::size_t i = 1; i <= k; ++i)
    if ((*this)(i) > other(i)) return false;
  return true;
}

std::string ScaleSequence::to_string() const {
  std::ostringstream os;
  os << std::setprecision(17);
  for (std::size_t i = 0; i < prefix_.size(); ++i) os << (i ? "," : "") << prefix_[i];
  return os.str();
}

}  // namespace srips
