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

#ifndef OMCERT_CHIROTOPE_H_
#define OMCERT_CHIROTOPE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "omcert/combinatorics.h"
#include "omcert/sign.h"

namespace omcert {

// An alternating sign map on r-tuples of {1..n}, stored as one sign per sorted
// r-subset in lexicographic order. Immutable once built.
//
// Construction does not validate the chirotope axioms; call CheckAxioms.
class Chirotope {
 public:
  // `text` lists C(n, r) signs over '+', '-', '0' in lexicographic order of
  // the sorted r-subsets. Throws kLengthMismatch, kBadCharacter or kAllZero.
  static Chirotope FromSignString(int n, int r, std::string_view text);

  // Same validation as FromSignString.
  static Chirotope FromSigns(int n, int r, std::vector<Sign> signs);

  int n() const { return n_; }
  int rank() const { return r_; }

  // Alternating extension: 0 on repeated entries, otherwise the stored sign
  // of the sorted subset times the parity of the sorting permutation.
  // Throws kIndexOutOfRange / kInvalidArgument on malformed tuples.
  Sign Evaluate(std::span<const Element> tuple) const;

  // Stored sign of a sorted subset. No parity bookkeeping.
  Sign SignOfSubset(std::span<const Element> sorted_subset) const;

  bool IsBasis(std::span<const Element> tuple) const {
    return !IsZero(Evaluate(tuple));
  }

  const std::vector<Sign>& signs() const { return signs_; }

  // The C(n, r) character listing used by the text file format.
  std::string SignString() const;

  bool IsUniform() const;

  // Copy with the sign of one sorted subset replaced. Used by mutation
  // searches and tests; the result may violate the axioms.
  Chirotope WithSign(std::span<const Element> sorted_subset, Sign s) const;

  friend bool operator==(const Chirotope&, const Chirotope&) = default;

 private:
  Chirotope(int n, int r, std::vector<Sign> signs)
      : n_(n), r_(r), signs_(std::move(signs)) {}

  int n_;
  int r_;
  std::vector<Sign> signs_;
};

enum class Axiom { kNonzero, kBasisExchange, kGrassmannPlucker };

struct AxiomViolation {
  Axiom axiom;
  // kBasisExchange: B1 then B2 then the element x of B1 - B2 with no partner.
  // kGrassmannPlucker: tau then the four lambda entries.
  Tuple witness;
};

struct AxiomReport {
  bool alternating_ok = true;
  bool nonzero_ok = true;
  bool exchange_ok = true;
  bool gp_ok = true;
  std::vector<AxiomViolation> violations;

  bool ok() const {
    return alternating_ok && nonzero_ok && exchange_ok && gp_ok;
  }
};

// Checks (i) not identically zero, (ii) basis exchange on the support and
// (iii) every 3-term Grassmann-Plucker sign condition. Together these
// characterize chirotopes. Failures are reported, never thrown.
AxiomReport CheckAxioms(const Chirotope& chi);

// The sign condition behind (iii): the values (a, -c, e) must either all
// vanish or contain both a positive and a negative entry.
bool GpSignsConsistent(Sign a, Sign minus_c, Sign e);

std::string_view AxiomName(Axiom axiom);

}  // namespace omcert

#endif  // OMCERT_CHIROTOPE_H_
