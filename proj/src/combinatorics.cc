// Copyright 2026 The Authors.
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

#include "omcert/combinatorics.h"

#include <sstream>

#include "omcert/error.h"

namespace omcert {

std::int64_t Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

std::int64_t LexRank(std::span<const Element> subset, int n) {
  const int k = static_cast<int>(subset.size());
  std::int64_t rank = 0;
  Element previous = 0;
  for (int i = 0; i < k; ++i) {
    // Count the subsets that agree on the first i entries and have a smaller
    // entry at position i.
    for (Element skipped = previous + 1; skipped < subset[i]; ++skipped) {
      rank += Binomial(n - skipped, k - i - 1);
    }
    previous = subset[i];
  }
  return rank;
}

Tuple LexUnrank(std::int64_t rank, int n, int k) {
  Tuple subset;
  subset.reserve(k);
  Element candidate = 1;
  for (int i = 0; i < k; ++i) {
    while (true) {
      const std::int64_t block = Binomial(n - candidate, k - i - 1);
      if (rank < block) break;
      rank -= block;
      ++candidate;
    }
    subset.push_back(candidate);
    ++candidate;
  }
  return subset;
}

std::vector<Tuple> Combinations(std::span<const Element> pool, int k) {
  std::vector<Tuple> out;
  const int m = static_cast<int>(pool.size());
  if (k < 0 || k > m) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Tuple t(k);
    for (int i = 0; i < k; ++i) t[i] = pool[idx[i]];
    out.push_back(std::move(t));
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Tuple> Combinations(int n, int k) {
  Tuple pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  return Combinations(pool, k);
}

Sign SortWithParity(Tuple& tuple) {
  int swaps = 0;
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
      if (tuple[j - 1] == tuple[j]) return Sign::kZero;
      std::swap(tuple[j - 1], tuple[j]);
      ++swaps;
    }
  }
  return swaps % 2 == 0 ? Sign::kPositive : Sign::kNegative;
}

Tuple Concat(std::span<const Element> prefix,
             std::initializer_list<Element> tail) {
  Tuple t(prefix.begin(), prefix.end());
  t.insert(t.end(), tail.begin(), tail.end());
  return t;
}

std::string JoinElements(std::span<const Element> elements,
                         std::string_view separator) {
  std::ostringstream os;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) os << separator;
    os << elements[i];
  }
  return os.str();
}

}  // namespace omcert
