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

#ifndef OMCERT_COMBINATORICS_H_
#define OMCERT_COMBINATORICS_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "omcert/sign.h"

namespace omcert {

// Ground set elements are 1-based.
using Element = int;

// An ordered sequence of elements. Sorted tuples double as subsets.
using Tuple = std::vector<Element>;

std::int64_t Binomial(int n, int k);

// Position of the sorted k-subset `subset` of {1..n} in the lexicographic
// listing of all k-subsets.
std::int64_t LexRank(std::span<const Element> subset, int n);

// Inverse of LexRank.
Tuple LexUnrank(std::int64_t rank, int n, int k);

// All sorted k-subsets of `pool` (which must itself be sorted), in
// lexicographic order.
std::vector<Tuple> Combinations(std::span<const Element> pool, int k);

// Same, over {1..n}.
std::vector<Tuple> Combinations(int n, int k);

// Sorts `tuple` in place and returns the sign of the sorting permutation, or
// kZero if an element repeats.
Sign SortWithParity(Tuple& tuple);

// Concatenation helper for building bracket tuples like (tau, x, y).
Tuple Concat(std::span<const Element> prefix, std::initializer_list<Element> tail);

// "1 2 3"
std::string JoinElements(std::span<const Element> elements,
                         std::string_view separator = " ");

}  // namespace omcert

#endif  // OMCERT_COMBINATORICS_H_
