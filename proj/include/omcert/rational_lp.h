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

#ifndef OMCERT_RATIONAL_LP_H_
#define OMCERT_RATIONAL_LP_H_

#include <ostream>
#include <utility>
#include <variant>
#include <vector>

#include "omcert/biquadratic.h"
#include "omcert/certificate.h"
#include "omcert/configuration.h"

namespace omcert {

enum class Relation { kLessEqual, kEqual };

struct ConstraintRef {
  bool equation = false;
  int index = 0;  // into BiquadraticSystem::inequalities or ::equations
};

struct LinearRow {
  std::vector<std::pair<int, Rational>> coefficients;  // (variable, value)
  Relation relation = Relation::kLessEqual;
  Rational rhs;
  ConstraintRef origin;
};

// Variables stand for log |[S]| of the nonzero brackets S.
struct LinearSystem {
  std::vector<Tuple> variables;  // sorted subsets, ascending
  std::vector<LinearRow> rows;
};

// [A][B] < [C][D] becomes x_A + x_B - x_C - x_D <= -1, an equation the same
// row with "= 0". Throws kZeroBracket if a bracket vanishes under chi.
LinearSystem EncodeSystem(const Chirotope& chi, const BiquadraticSystem& system);

// Multiplier per row: nonnegative on <= rows, any sign on = rows.
struct FarkasCertificate {
  std::vector<Rational> multipliers;
};

struct Feasible {
  std::vector<Rational> assignment;
};

struct Infeasible {
  FarkasCertificate certificate;
};

using FeasibilityResult = std::variant<Feasible, Infeasible>;

// Exact decision by a phase-one simplex on the Farkas alternative with
// Bland's rule. Both outcomes are checked by substitution before returning.
FeasibilityResult SolveFeasibility(const LinearSystem& ls);

bool SatisfiesAll(const LinearSystem& ls, const std::vector<Rational>& x);

// The rows combine to 0 <= (negative constant).
bool IsFarkasWitness(const LinearSystem& ls, const FarkasCertificate& cert);

// Scales the multipliers to coprime integers and turns every row with a
// nonzero multiplier into a certificate entry; equations with negative
// multipliers enter with their sides swapped. Throws kEmptyInequalitySupport
// and kCancellationFailed (the result did not verify).
BfpCertificate BfpFromFarkas(const Chirotope& chi,
                             const BiquadraticSystem& system,
                             const LinearSystem& ls,
                             const FarkasCertificate& cert);

// CPLEX LP text with variables named x_1_2_4.
void WriteLpFormat(std::ostream& os, const LinearSystem& ls);

}  // namespace omcert

#endif  // OMCERT_RATIONAL_LP_H_
