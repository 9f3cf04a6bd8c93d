// Copyright 2026 The faultex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "faultex/error.hpp"
#include "faultex/ratio.hpp"

namespace faultex::closed_form {

namespace detail {
inline std::int64_t as_int(std::size_t n) { return static_cast<std::int64_t>(n); }
inline void require_ring_size(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::kInvalidSize, "ring size must be at least 3, got " + std::to_string(n));
}
}  // namespace detail

// Overhead of Algorithm Ring on an n-node ring.
inline ExactRatio ring_overhead(std::size_t n) {
  detail::require_ring_size(n);
  const auto k = detail::as_int(n);
  if (n == 3) return 1;
  if (n <= 5) return {2 * k - 3, k};
  if (n <= 7) return {3, 2};
  if (n <= 19) return {2 * k - 2, k + 1};
  if (n <= 23) return {9, 5};
  return {2 * k - 1, k + 2};
}

// Overhead of an i-step class-A1 strategy, 1 <= i <= n - 2.
inline ExactRatio istep_a1(std::size_t n, std::size_t i) {
  detail::require_ring_size(n);
  if (i < 1 || i > n - 2) {
    throw Error(ErrorKind::kInvalidStrategy,
                "step count " + std::to_string(i) + " outside 1.." + std::to_string(n - 2));
  }
  const auto k = detail::as_int(n);
  const auto s = detail::as_int(i);
  if (i == n - 2) return {2 * k - 3, k - 1};
  return max(max(ExactRatio(k + s - 1, k - 1), ExactRatio(3 * s + 3, s + 3)),
             ExactRatio(s + 2 * k - 3, s + k));
}

// Overhead of either class-A0 (DFS) strategy on an n-node ring.
inline ExactRatio class_a0(std::size_t n) {
  detail::require_ring_size(n);
  const auto k = detail::as_int(n);
  return {2 * k - 3, k};
}

// Smallest overhead of any ring exploration strategy. The table starts at
// n = 4; n = 3 reports 1, matching Algorithm Ring there.
inline ExactRatio lower_bound(std::size_t n) {
  detail::require_ring_size(n);
  const auto k = detail::as_int(n);
  if (n == 3) return 1;
  if (n <= 5) return {2 * k - 3, k};
  if (n <= 7) return {3, 2};
  if (n <= 19) return {2 * k - 2, k + 1};
  if (n <= 23) return {9, 5};
  return {2 * k - 1, k + 2};
}

// Upper bound on the overhead of any DFS strategy on a Hamiltonian graph.
inline ExactRatio dfs_bound(std::size_t n) {
  detail::require_ring_size(n);
  const auto k = detail::as_int(n);
  return {2 * k - 4, k - 1};
}

}  // namespace faultex::closed_form
