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

#include "omcert/chirotope.h"

#include <algorithm>
#include <unordered_set>

#include "omcert/error.h"

namespace omcert {

namespace {

Sign SignFromChar(char c, std::size_t position) {
  switch (c) {
    case '+':
      return Sign::kPositive;
    case '-':
      return Sign::kNegative;
    case '0':
      return Sign::kZero;
    default:
      throw Error(ErrorCode::kBadCharacter,
                  "unexpected character '" + std::string(1, c) +
                      "' at sign position " + std::to_string(position + 1));
  }
}

void CheckShape(int n, int r) {
  if (r < 2 || n < r) {
    throw Error(ErrorCode::kInvalidArgument,
                "need 2 <= r <= n, got n=" + std::to_string(n) +
                    " r=" + std::to_string(r));
  }
}

}  // namespace

Chirotope Chirotope::FromSignString(int n, int r, std::string_view text) {
  CheckShape(n, r);
  std::vector<Sign> signs;
  signs.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    signs.push_back(SignFromChar(text[i], i));
  }
  return FromSigns(n, r, std::move(signs));
}

Chirotope Chirotope::FromSigns(int n, int r, std::vector<Sign> signs) {
  CheckShape(n, r);
  const std::int64_t expected = Binomial(n, r);
  if (static_cast<std::int64_t>(signs.size()) != expected) {
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(expected) + " signs, got " +
                    std::to_string(signs.size()));
  }
  if (std::all_of(signs.begin(), signs.end(), IsZero)) {
    throw Error(ErrorCode::kAllZero, "every sign is 0");
  }
  return Chirotope(n, r, std::move(signs));
}

Sign Chirotope::Evaluate(std::span<const Element> tuple) const {
  if (static_cast<int>(tuple.size()) != r_) {
    throw Error(ErrorCode::kInvalidArgument,
                "tuple has " + std::to_string(tuple.size()) +
                    " entries, rank is " + std::to_string(r_));
  }
  for (Element e : tuple) {
    if (e < 1 || e > n_) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "element " + std::to_string(e) + " not in 1.." +
                      std::to_string(n_));
    }
  }
  Tuple sorted(tuple.begin(), tuple.end());
  const Sign parity = SortWithParity(sorted);
  if (IsZero(parity)) return Sign::kZero;
  return parity * signs_[LexRank(sorted, n_)];
}

Sign Chirotope::SignOfSubset(std::span<const Element> sorted_subset) const {
  return signs_[LexRank(sorted_subset, n_)];
}

std::string Chirotope::SignString() const {
  std::string out;
  out.reserve(signs_.size());
  for (Sign s : signs_) out.push_back(ToChar(s));
  return out;
}

bool Chirotope::IsUniform() const {
  return std::none_of(signs_.begin(), signs_.end(), IsZero);
}

Chirotope Chirotope::WithSign(std::span<const Element> sorted_subset,
                              Sign s) const {
  std::vector<Sign> signs = signs_;
  signs[LexRank(sorted_subset, n_)] = s;
  return Chirotope(n_, r_, std::move(signs));
}

bool GpSignsConsistent(Sign a, Sign minus_c, Sign e) {
  const bool has_positive = a == Sign::kPositive ||
                            minus_c == Sign::kPositive || e == Sign::kPositive;
  const bool has_negative = a == Sign::kNegative ||
                            minus_c == Sign::kNegative || e == Sign::kNegative;
  return has_positive == has_negative;
}

std::string_view AxiomName(Axiom axiom) {
  switch (axiom) {
    case Axiom::kNonzero:
      return "nonzero";
    case Axiom::kBasisExchange:
      return "basis-exchange";
    case Axiom::kGrassmannPlucker:
      return "grassmann-plucker";
  }
  return "?";
}

AxiomReport CheckAxioms(const Chirotope& chi) {
  const int n = chi.n();
  const int r = chi.rank();
  AxiomReport report;

  report.nonzero_ok = !std::all_of(chi.signs().begin(), chi.signs().end(),
                                   IsZero);
  if (!report.nonzero_ok) {
    report.violations.push_back({Axiom::kNonzero, {}});
  }

  // Basis exchange over the support.
  std::vector<Tuple> bases;
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(chi.signs().size());
       ++i) {
    if (!IsZero(chi.signs()[i])) bases.push_back(LexUnrank(i, n, r));
  }
  for (const Tuple& b1 : bases) {
    for (const Tuple& b2 : bases) {
      for (Element x : b1) {
        if (std::binary_search(b2.begin(), b2.end(), x)) continue;
        bool found = false;
        for (Element y : b2) {
          if (std::binary_search(b1.begin(), b1.end(), y)) continue;
          Tuple swapped = b1;
          std::replace(swapped.begin(), swapped.end(), x, y);
          if (chi.IsBasis(swapped)) {
            found = true;
            break;
          }
        }
        if (!found) {
          report.exchange_ok = false;
          Tuple witness = b1;
          witness.insert(witness.end(), b2.begin(), b2.end());
          witness.push_back(x);
          report.violations.push_back({Axiom::kBasisExchange, witness});
        }
      }
    }
  }

  // 3-term Grassmann-Plucker sign conditions. Sorted tau and lambda suffice by
  // the alternating law.
  for (const Tuple& tau : Combinations(n, r - 2)) {
    Tuple rest;
    for (Element e = 1; e <= n; ++e) {
      if (!std::binary_search(tau.begin(), tau.end(), e)) rest.push_back(e);
    }
    for (const Tuple& lam : Combinations(rest, 4)) {
      const Sign a = chi.Evaluate(Concat(tau, {lam[0], lam[1]})) *
                     chi.Evaluate(Concat(tau, {lam[2], lam[3]}));
      const Sign c = chi.Evaluate(Concat(tau, {lam[0], lam[2]})) *
                     chi.Evaluate(Concat(tau, {lam[1], lam[3]}));
      const Sign e = chi.Evaluate(Concat(tau, {lam[0], lam[3]})) *
                     chi.Evaluate(Concat(tau, {lam[1], lam[2]}));
      if (!GpSignsConsistent(a, -c, e)) {
        report.gp_ok = false;
        Tuple witness = tau;
        witness.insert(witness.end(), lam.begin(), lam.end());
        report.violations.push_back({Axiom::kGrassmannPlucker, witness});
      }
    }
  }
  return report;
}

}  // namespace omcert
