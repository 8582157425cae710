#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "entrograph/error.hpp"

namespace entrograph {

/// Node -> cluster assignment with labels in 0..k-1.
struct Partition {
  std::vector<std::uint32_t> labels;
  std::uint32_t k = 0;

  Partition() = default;
  Partition(std::vector<std::uint32_t> l, std::uint32_t clusters) : labels(std::move(l)), k(clusters) { validate(); }

  std::size_t size() const noexcept { return labels.size(); }

  void validate() const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] >= k) {
        fail(ErrorCode::InvariantViolation,
             "node " + std::to_string(i) + " has label " + std::to_string(labels[i]) + " outside 0.." +
                 std::to_string(k == 0 ? 0 : k - 1));
      }
    }
  }

  std::vector<std::vector<std::uint32_t>> groups() const {
    std::vector<std::vector<std::uint32_t>> out(k);
    for (std::uint32_t i = 0; i < labels.size(); ++i) out[labels[i]].push_back(i);
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

}  // namespace entrograph
