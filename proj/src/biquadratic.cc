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

#include "omcert/biquadratic.h"

#include <algorithm>

#include "omcert/error.h"

namespace omcert {

BracketMonomial BracketNormalForm(std::span<const Element> tuple) {
  Tuple sorted(tuple.begin(), tuple.end());
  const Sign parity = SortWithParity(sorted);
  if (IsZero(parity)) {
    throw Error(ErrorCode::kRepeatedIndex,
                "bracket (" + JoinElements(tuple) + ") repeats an element");
  }
  return {std::move(sorted), parity};
}

std::string FormatBracket(std::span<const Element> subset) {
  return "[" + JoinElements(subset) + "]";
}

std::pair<const Tuple&, const Tuple&> NormalizedPair::TermTuples(
    Term t) const {
  switch (t) {
    case Term::kAB:
      return {A, B};
    case Term::kCD:
      return {C, D};
    case Term::kEF:
      break;
  }
  return {E, F};
}

Sign NormalizedPair::TermSign(Term t) const {
  switch (t) {
    case Term::kAB:
      return a;
    case Term::kCD:
      return c;
    case Term::kEF:
      break;
  }
  return e;
}

NormalizedPair PairTuples(std::span<const Element> tau,
                          std::span<const Element> lambda) {
  if (lambda.size() != 4) {
    throw Error(ErrorCode::kInvalidArgument, "lambda needs four entries");
  }
  Tuple all(tau.begin(), tau.end());
  all.insert(all.end(), lambda.begin(), lambda.end());
  if (IsZero(SortWithParity(all))) {
    throw Error(ErrorCode::kRepeatedIndex,
                "tau and lambda must be disjoint with distinct entries");
  }
  NormalizedPair p;
  p.tau.assign(tau.begin(), tau.end());
  p.lambda.assign(lambda.begin(), lambda.end());
  const Tuple& l = p.lambda;
  p.A = Concat(tau, {l[0], l[1]});
  p.B = Concat(tau, {l[2], l[3]});
  p.C = Concat(tau, {l[0], l[2]});
  p.D = Concat(tau, {l[1], l[3]});
  p.E = Concat(tau, {l[0], l[3]});
  p.F = Concat(tau, {l[1], l[2]});
  return p;
}

NormalizedPair AssemblePair(const Chirotope& chi, std::span<const Element> tau,
                            std::span<const Element> lambda) {
  if (static_cast<int>(tau.size()) != chi.rank() - 2) {
    throw Error(ErrorCode::kInvalidArgument, "need |tau| = r - 2");
  }
  NormalizedPair p = PairTuples(tau, lambda);
  p.a = chi.Evaluate(p.A) * chi.Evaluate(p.B);
  p.c = chi.Evaluate(p.C) * chi.Evaluate(p.D);
  p.e = chi.Evaluate(p.E) * chi.Evaluate(p.F);
  return p;
}

NormalizedPair NormalizePair(const Chirotope& chi, std::span<const Element> tau,
                             std::span<const Element> lambda) {
  Tuple perm(lambda.begin(), lambda.end());
  std::sort(perm.begin(), perm.end());
  do {
    NormalizedPair p = AssemblePair(chi, tau, perm);
    if (p.a != Sign::kNegative && p.c != Sign::kNegative &&
        p.e != Sign::kNegative) {
      return p;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw Error(ErrorCode::kNoNormalization,
              "no permutation of lambda=(" + JoinElements(lambda) +
                  ") normalizes tau=(" + JoinElements(tau) + ")");
}

std::string_view SideName(Side side) {
  switch (side) {
    case Side::kAbLtCd:
      return "AB<CD";
    case Side::kEfLtCd:
      return "EF<CD";
    case Side::kAbEqCd:
      return "AB=CD";
    case Side::kEfEqCd:
      return "EF=CD";
    case Side::kCdEqAb:
      return "CD=AB";
    case Side::kCdEqEf:
      return "CD=EF";
  }
  return "?";
}

bool ParseSide(std::string_view text, Side& side) {
  for (Side s : {Side::kAbLtCd, Side::kEfLtCd, Side::kAbEqCd, Side::kEfEqCd,
                 Side::kCdEqAb, Side::kCdEqEf}) {
    if (SideName(s) == text) {
      side = s;
      return true;
    }
  }
  return false;
}

bool IsEquation(Side side) {
  return side != Side::kAbLtCd && side != Side::kEfLtCd;
}

Term LhsTerm(Side side) {
  switch (side) {
    case Side::kAbLtCd:
    case Side::kAbEqCd:
      return Term::kAB;
    case Side::kEfLtCd:
    case Side::kEfEqCd:
      return Term::kEF;
    case Side::kCdEqAb:
    case Side::kCdEqEf:
      break;
  }
  return Term::kCD;
}

Term RhsTerm(Side side) {
  switch (side) {
    case Side::kCdEqAb:
      return Term::kAB;
    case Side::kCdEqEf:
      return Term::kEF;
    default:
      break;
  }
  return Term::kCD;
}

BiquadraticConstraint MakeConstraint(const NormalizedPair& origin, Side side) {
  BiquadraticConstraint c;
  const auto [l0, l1] = origin.TermTuples(LhsTerm(side));
  const auto [r0, r1] = origin.TermTuples(RhsTerm(side));
  c.lhs = {BracketNormalForm(l0), BracketNormalForm(l1)};
  c.rhs = {BracketNormalForm(r0), BracketNormalForm(r1)};
  c.origin = origin;
  c.side = side;
  return c;
}

std::string FormatConstraint(const BiquadraticConstraint& constraint) {
  std::string out = constraint.is_equation() ? "EQ " : "INEQ ";
  out += FormatBracket(constraint.lhs[0].subset);
  out += FormatBracket(constraint.lhs[1].subset);
  out += constraint.is_equation() ? " = " : " < ";
  out += FormatBracket(constraint.rhs[0].subset);
  out += FormatBracket(constraint.rhs[1].subset);
  return out;
}

BiquadraticSystem EnumerateSystem(const Chirotope& chi) {
  BiquadraticSystem system;
  const int n = chi.n();
  for (const Tuple& tau : Combinations(n, chi.rank() - 2)) {
    Tuple rest;
    for (Element x = 1; x <= n; ++x) {
      if (!std::binary_search(tau.begin(), tau.end(), x)) rest.push_back(x);
    }
    for (const Tuple& lambda : Combinations(rest, 4)) {
      const NormalizedPair p = NormalizePair(chi, tau, lambda);
      // A vanishing term only yields the equation between the other two.
      if (p.a == Sign::kPositive && p.e == Sign::kPositive) {
        system.inequalities.push_back(MakeConstraint(p, Side::kAbLtCd));
        system.inequalities.push_back(MakeConstraint(p, Side::kEfLtCd));
      }
      if (p.c == Sign::kPositive) {
        if (p.a == Sign::kZero) {
          system.equations.push_back(MakeConstraint(p, Side::kEfEqCd));
        }
        if (p.e == Sign::kZero) {
          system.equations.push_back(MakeConstraint(p, Side::kAbEqCd));
        }
      }
    }
  }
  return system;
}

void WriteSystem(std::ostream& os, const BiquadraticSystem& system) {
  for (const auto& c : system.inequalities) os << FormatConstraint(c) << '\n';
  for (const auto& c : system.equations) os << FormatConstraint(c) << '\n';
}

namespace {

BracketPair SortedPair(const std::array<BracketMonomial, 2>& side) {
  BracketPair pair{side[0].subset, side[1].subset};
  if (pair[1] < pair[0]) std::swap(pair[0], pair[1]);
  return pair;
}

}  // namespace

ConstraintKey KeyOf(const BiquadraticConstraint& constraint) {
  ConstraintKey key{SortedPair(constraint.lhs), SortedPair(constraint.rhs),
                    constraint.is_equation()};
  if (key.equation && key.rhs < key.lhs) std::swap(key.lhs, key.rhs);
  return key;
}

SystemIndex::SystemIndex(const BiquadraticSystem& system) {
  for (const auto& c : system.inequalities) keys_.insert(KeyOf(c));
  for (const auto& c : system.equations) keys_.insert(KeyOf(c));
}

bool SystemIndex::Contains(const BiquadraticConstraint& constraint) const {
  return keys_.contains(KeyOf(constraint));
}

}  // namespace omcert
