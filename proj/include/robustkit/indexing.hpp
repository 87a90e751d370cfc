// Copyright 2026 The robustkit authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROBUSTKIT_INDEXING_HPP
#define ROBUSTKIT_INDEXING_HPP

#include <utility>
#include <vector>

#include "robustkit/errors.hpp"

namespace robustkit {

// Index maps for the product basis |i> (x) |j> of C^n (x) C^n and for the
// enumeration of antisymmetric pairs (i, j), i < j. Both are 1-based in the
// public API, matching the |1>..|n> basis convention; storage is 0-based.

/// Linear index of |i> (x) |j>: c(i,j) = n(i-1) + j.
inline int index_c(int i, int j, int n) {
  if (n < 1 || i < 1 || i > n || j < 1 || j > n)
    throw validation_error("index_c: indices out of range");
  return n * (i - 1) + j;
}

/// Position of the pair (i, j), i < j, in the antisymmetric enumeration:
/// f(i,j) = (j-i) + n(i-1) - i(i-1)/2, a bijection onto {1,..,n(n-1)/2}.
inline int index_f(int i, int j, int n) {
  if (n < 2 || i < 1 || j <= i || j > n)
    throw validation_error("index_f: requires 1 <= i < j <= n");
  return (j - i) + n * (i - 1) - i * (i - 1) / 2;
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

/// All pairs (i, j), i < j, ordered so that pairs[f(i,j) - 1] == (i, j).
inline std::vector<std::pair<int, int>> antisym_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(pair_count(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

}  // namespace robustkit

#endif  // ROBUSTKIT_INDEXING_HPP
