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

#ifndef OMCERT_BIQUADRATIC_H_
#define OMCERT_BIQUADRATIC_H_

#include <array>
#include <compare>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omcert/chirotope.h"
#include "omcert/combinatorics.h"
#include "omcert/sign.h"

namespace omcert {

// A bracket variable: the sorted subset plus the parity picked up when the
// originating ordered tuple was sorted. [t] = orientation * [subset].
struct BracketMonomial {
  Tuple subset;
  Sign orientation = Sign::kPositive;

  friend auto operator<=>(const BracketMonomial&,
                          const BracketMonomial&) = default;
};

// Throws kRepeatedIndex.
BracketMonomial BracketNormalForm(std::span<const Element> tuple);

// "[1 2 3]"
std::string FormatBracket(std::span<const Element> subset);

// One of the three products of a 3-term Grassmann-Plucker relation
//   [A][B] - [C][D] + [E][F],
// with A=(tau l1 l2), B=(tau l3 l4), C=(tau l1 l3), D=(tau l2 l4),
// E=(tau l1 l4), F=(tau l2 l3).
enum class Term { kAB, kCD, kEF };

struct NormalizedPair {
  Tuple tau;
  Tuple lambda;
  Tuple A, B, C, D, E, F;
  // Signs of chi(A)chi(B), chi(C)chi(D), chi(E)chi(F); all nonnegative.
  Sign a = Sign::kZero;
  Sign c = Sign::kZero;
  Sign e = Sign::kZero;

  std::pair<const Tuple&, const Tuple&> TermTuples(Term t) const;
  Sign TermSign(Term t) const;
};

// The six ordered tuples for (tau, lambda) as given, signs left at zero.
// Throws kRepeatedIndex if tau and lambda overlap or repeat.
NormalizedPair PairTuples(std::span<const Element> tau,
                          std::span<const Element> lambda);

// PairTuples plus the three term signs under chi.
NormalizedPair AssemblePair(const Chirotope& chi, std::span<const Element> tau,
                            std::span<const Element> lambda);

// Lexicographically least permutation of lambda making all three term signs
// nonnegative. Throws kNoNormalization if none exists (the relation violates
// the Grassmann-Plucker sign condition) and kRepeatedIndex if tau and lambda
// overlap.
NormalizedPair NormalizePair(const Chirotope& chi, std::span<const Element> tau,
                             std::span<const Element> lambda);

// Which two terms of the normalized pair a constraint relates, written
// lhs-relation-rhs. The last two are equations read right to left; they let
// a certificate use an equation in either direction.
enum class Side { kAbLtCd, kEfLtCd, kAbEqCd, kEfEqCd, kCdEqAb, kCdEqEf };

std::string_view SideName(Side side);
// Inverse of SideName; returns false on unknown text.
bool ParseSide(std::string_view text, Side& side);
bool IsEquation(Side side);
Term LhsTerm(Side side);
Term RhsTerm(Side side);

// [lhs0][lhs1] < [rhs0][rhs1] or [lhs0][lhs1] = [rhs0][rhs1].
struct BiquadraticConstraint {
  std::array<BracketMonomial, 2> lhs;
  std::array<BracketMonomial, 2> rhs;
  NormalizedPair origin;
  Side side = Side::kAbLtCd;

  bool is_equation() const { return IsEquation(side); }
};

BiquadraticConstraint MakeConstraint(const NormalizedPair& origin, Side side);

// "INEQ [1 2 3][1 4 5] < [1 2 4][1 3 5]" or "EQ ... = ...".
std::string FormatConstraint(const BiquadraticConstraint& constraint);

struct BiquadraticSystem {
  std::vector<BiquadraticConstraint> inequalities;
  std::vector<BiquadraticConstraint> equations;
};

// Scans sorted tau and sorted lambda disjoint from tau, normalizes, and adds
//   [A][B] < [C][D] and [E][F] < [C][D]   if a > 0 and e > 0,
//   [E][F] = [C][D]                       if a = 0 and c > 0,
//   [A][B] = [C][D]                       if e = 0 and c > 0.
// Every bracket of every constraint is therefore nonzero.
BiquadraticSystem EnumerateSystem(const Chirotope& chi);

void WriteSystem(std::ostream& os, const BiquadraticSystem& system);

// Set-level identity of a constraint: which unordered bracket pairs appear on
// each side. Orientation is not part of membership.
using BracketPair = std::array<Tuple, 2>;

struct ConstraintKey {
  BracketPair lhs;
  BracketPair rhs;
  bool equation = false;

  friend auto operator<=>(const ConstraintKey&, const ConstraintKey&) = default;
};

// Equations are symmetric, so their key orders the two sides.
ConstraintKey KeyOf(const BiquadraticConstraint& constraint);

class SystemIndex {
 public:
  explicit SystemIndex(const BiquadraticSystem& system);

  bool Contains(const BiquadraticConstraint& constraint) const;

 private:
  std::set<ConstraintKey> keys_;
};

}  // namespace omcert

#endif  // OMCERT_BIQUADRATIC_H_
