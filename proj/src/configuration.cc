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

#include "omcert/configuration.h"

#include <random>

#include "omcert/error.h"

namespace omcert {

Rational Determinant(std::vector<Vector> rows) {
  const std::size_t size = rows.size();
  Rational det = 1;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      std::swap(rows[pivot], rows[col]);
      det = -det;
    }
    det *= rows[col][col];
    for (std::size_t row = col + 1; row < size; ++row) {
      if (sgn(rows[row][col]) == 0) continue;
      const Rational factor = rows[row][col] / rows[col][col];
      for (std::size_t k = col; k < size; ++k) {
        rows[row][k] -= factor * rows[col][k];
      }
    }
  }
  return det;
}

Rational BracketValue(const VectorConfiguration& config,
                      std::span<const Element> tuple) {
  // Selected columns become rows; the determinant is unchanged by transposing.
  std::vector<Vector> rows;
  rows.reserve(tuple.size());
  for (Element e : tuple) {
    if (e < 1 || e > config.n()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "column " + std::to_string(e) + " not in 1.." +
                      std::to_string(config.n()));
    }
    rows.push_back(config.columns[e - 1]);
  }
  return Determinant(std::move(rows));
}

Chirotope ChirotopeFromConfiguration(const VectorConfiguration& config) {
  const int n = config.n();
  const int r = config.rank;
  if (r < 2 || n < r) {
    throw Error(ErrorCode::kInvalidArgument,
                "configuration needs 2 <= r <= n, got n=" + std::to_string(n) +
                    " r=" + std::to_string(r));
  }
  for (const Vector& column : config.columns) {
    if (static_cast<int>(column.size()) != r) {
      throw Error(ErrorCode::kInvalidArgument,
                  "every column needs exactly r coordinates");
    }
  }
  std::vector<Sign> signs;
  signs.reserve(Binomial(n, r));
  bool any_nonzero = false;
  for (const Tuple& subset : Combinations(n, r)) {
    const Sign s = SignOf(sgn(BracketValue(config, subset)));
    any_nonzero = any_nonzero || !IsZero(s);
    signs.push_back(s);
  }
  if (!any_nonzero) {
    throw Error(ErrorCode::kRankDeficient,
                "every r x r determinant of the configuration vanishes");
  }
  return Chirotope::FromSigns(n, r, std::move(signs));
}

VectorConfiguration MomentCurve(int n, int r) {
  VectorConfiguration config{r, {}};
  for (int t = 1; t <= n; ++t) {
    Vector column(r);
    Rational power = 1;
    for (int k = 0; k < r; ++k) {
      column[k] = power;
      power *= t;
    }
    config.columns.push_back(std::move(column));
  }
  return config;
}

VectorConfiguration RandomConfiguration(int n, int r, std::uint64_t seed,
                                        int range) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numerator(-range, range);
  std::uniform_int_distribution<int> denominator(1, 3);
  while (true) {
    VectorConfiguration config{r, {}};
    for (int i = 0; i < n; ++i) {
      Vector column(r);
      for (Rational& x : column) {
        x = Rational(numerator(rng), denominator(rng));
        x.canonicalize();
      }
      config.columns.push_back(std::move(column));
    }
    for (const Tuple& subset : Combinations(n, r)) {
      if (sgn(BracketValue(config, subset)) != 0) return config;
    }
  }
}

}  // namespace omcert
