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

#ifndef OMCERT_CERTIFICATE_H_
#define OMCERT_CERTIFICATE_H_

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "omcert/biquadratic.h"
#include "omcert/chirotope.h"
#include "omcert/omp.h"

namespace omcert {

// The Grassmann-Plucker relation attached to a pivot L + a -> L + b:
//   [L,g,f][L,a,b] - [L,g,a][L,f,b] + [L,g,b][L,f,a].
struct GpRelation {
  Tuple A, B, C, D, E, F;
  Sign sA = Sign::kZero, sB = Sign::kZero, sC = Sign::kZero;
  Sign sD = Sign::kZero, sE = Sign::kZero, sF = Sign::kZero;
};

GpRelation GpRelationForPivot(const OMProgram& prog, const Pivot& pivot);

// Types 1..12 (chi(A)chi(B) != 0) and 1'..8' (chi(A)chi(B) = 0).
struct GpType {
  int label = 0;
  bool primed = false;

  std::string Name() const;
  friend auto operator<=>(const GpType&, const GpType&) = default;
};

// One row of the sign tables: (chi(A)chi(B), chi(C), chi(D), chi(E), chi(F)).
struct GpTypeRow {
  GpType type;
  std::array<Sign, 5> pattern;
};

// The twelve rows for strictly increasing pivots followed by the eight rows
// for degenerate or horizontal ones.
std::span<const GpTypeRow> GpTypeTable();

// Throws kUnlistedPattern when the sign pattern matches no row.
GpType ClassifyGp(const GpRelation& relation);

// Along a cycle the sign of v(B)_f is preserved by every type except
// 2, 5, 8, 11, which move from the negative side to the positive side.
enum class TypeGroup { kPositive, kNegative, kCrossing };

TypeGroup GroupOf(GpType type);

struct CertificateEntry {
  BiquadraticConstraint constraint;
  std::int64_t multiplicity = 1;
};

// A product identity of biquadratic constraints, bound to one chirotope by
// the digest of its sign string.
struct BfpCertificate {
  int n = 0;
  int r = 0;
  std::string chirotope_digest;
  std::vector<CertificateEntry> inequalities;
  std::vector<CertificateEntry> equations;
};

// SHA-256 (hex) of the canonical chirotope file text.
std::string ChirotopeDigest(const Chirotope& chi);

struct VerificationFailure {
  // NonEmptyRequired, ShapeMismatch, DigestMismatch, InvalidChirotope,
  // BadMultiplicity, NotInSystem, MultisetMismatch or SignMismatch.
  std::string reason;
  std::string detail;
};

struct VerificationReport {
  bool valid = false;
  std::map<Tuple, std::int64_t> lhs_multiset;
  std::map<Tuple, std::int64_t> rhs_multiset;
  // Product of the left orientations times the product of the right ones;
  // + when the formal products agree in sign.
  Sign sign_balance = Sign::kPositive;
  std::vector<VerificationFailure> failures;

  bool HasFailure(std::string_view reason) const;
};

// Valid iff the certificate belongs to chi, has at least one inequality,
// every constraint is in the recomputed system, and the two bracket products
// agree as multisets and in orientation sign. Validity proves chi is not
// realizable.
VerificationReport VerifyCertificate(const Chirotope& chi,
                                     const BfpCertificate& certificate);

struct CycleCertificate {
  BfpCertificate certificate;
  std::vector<GpType> types;  // one per pivot
};

// Classifies the relation of every pivot and collects
//   types 1, 4, 7, 10, 1', 4', 5', 8':   [E][F] < [C][D] / [E][F] = [C][D],
//   types 3, 6, 9, 12, 2', 3', 6', 7':   [C][D] < [E][F] / [C][D] = [E][F],
//   types 2, 5, 8, 11:                   [E][F] < [C][D] of the normalized
//                                        pair,
// each rewritten against its normalized pair and counted with multiplicity.
// The result is returned only if VerifyCertificate accepts it. Throws
// kTypeClassificationFailed or kCancellationFailed.
CycleCertificate CycleToBfp(const OMProgram& prog,
                            const NonDegenerateCycle& cycle);

// Adds `constraint` to the matching list, merging repeats.
void AddToCertificate(BfpCertificate& certificate,
                      const BiquadraticConstraint& constraint,
                      std::int64_t multiplicity);

}  // namespace omcert

#endif  // OMCERT_CERTIFICATE_H_
