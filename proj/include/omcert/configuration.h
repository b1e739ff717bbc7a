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

#ifndef OMCERT_CONFIGURATION_H_
#define OMCERT_CONFIGURATION_H_

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "omcert/chirotope.h"
#include "omcert/combinatorics.h"

namespace omcert {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

// n vectors in Q^r with exact coordinates.
struct VectorConfiguration {
  int rank = 0;
  std::vector<Vector> columns;

  int n() const { return static_cast<int>(columns.size()); }
};

// Exact determinant by rational Gaussian elimination. `rows` is square.
Rational Determinant(std::vector<Vector> rows);

// det(x_{t1}, ..., x_{tr}) for a 1-based tuple of column indices.
Rational BracketValue(const VectorConfiguration& config,
                      std::span<const Element> tuple);

// chi(S) = sign det of the selected columns. Throws kRankDeficient when all
// determinants vanish and kInvalidArgument on malformed input.
Chirotope ChirotopeFromConfiguration(const VectorConfiguration& config);

// Columns (1, t, t^2, ..., t^{r-1}) for t = 1..n. Every sorted bracket is a
// positive Vandermonde determinant.
VectorConfiguration MomentCurve(int n, int r);

// Random rational coordinates p/q with |p| <= range and 1 <= q <= 3, redrawn
// until some r columns are independent. Deterministic for a given seed.
VectorConfiguration RandomConfiguration(int n, int r, std::uint64_t seed,
                                        int range = 3);

}  // namespace omcert

#endif  // OMCERT_CONFIGURATION_H_
