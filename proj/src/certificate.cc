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

#include "omcert/certificate.h"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include <openssl/sha.h>

#include "omcert/error.h"
#include "omcert/io.h"

namespace omcert {

namespace {

constexpr Sign P = Sign::kPositive;
constexpr Sign M = Sign::kNegative;
constexpr Sign Z = Sign::kZero;

constexpr std::array<GpTypeRow, 20> kTable = {{
    {{1, false}, {P, P, P, P, P}},
    {{2, false}, {P, P, P, P, M}},
    {{3, false}, {P, P, M, P, M}},
    {{4, false}, {P, M, M, M, M}},
    {{5, false}, {P, M, M, M, P}},
    {{6, false}, {P, M, P, M, P}},
    {{7, false}, {M, P, M, M, P}},
    {{8, false}, {M, P, M, M, M}},
    {{9, false}, {M, P, P, M, M}},
    {{10, false}, {M, M, P, P, M}},
    {{11, false}, {M, M, P, P, P}},
    {{12, false}, {M, M, M, P, P}},
    {{1, true}, {Z, P, P, P, P}},
    {{2, true}, {Z, P, P, M, M}},
    {{3, true}, {Z, P, M, P, M}},
    {{4, true}, {Z, P, M, M, P}},
    {{5, true}, {Z, M, P, P, M}},
    {{6, true}, {Z, M, P, M, P}},
    {{7, true}, {Z, M, M, P, P}},
    {{8, true}, {Z, M, M, M, M}},
}};

BracketPair PairOf(const Tuple& x, const Tuple& y) {
  BracketPair pair{x, y};
  std::sort(pair[0].begin(), pair[0].end());
  std::sort(pair[1].begin(), pair[1].end());
  if (pair[1] < pair[0]) std::swap(pair[0], pair[1]);
  return pair;
}

// Which term of the normalized pair multiplies the same two brackets.
Term TermOf(const NormalizedPair& p, const BracketPair& pair) {
  for (Term t : {Term::kAB, Term::kCD, Term::kEF}) {
    const auto [x, y] = p.TermTuples(t);
    if (PairOf(x, y) == pair) return t;
  }
  throw Error(ErrorCode::kCancellationFailed,
              "bracket pair does not belong to the normalized relation");
}

Side SideFor(Term lhs, Term rhs, bool equation) {
  if (!equation) {
    if (rhs == Term::kCD && lhs == Term::kAB) return Side::kAbLtCd;
    if (rhs == Term::kCD && lhs == Term::kEF) return Side::kEfLtCd;
  } else {
    if (rhs == Term::kCD && lhs == Term::kAB) return Side::kAbEqCd;
    if (rhs == Term::kCD && lhs == Term::kEF) return Side::kEfEqCd;
    if (lhs == Term::kCD && rhs == Term::kAB) return Side::kCdEqAb;
    if (lhs == Term::kCD && rhs == Term::kEF) return Side::kCdEqEf;
  }
  throw Error(ErrorCode::kCancellationFailed,
              "constraint is not of normalized form");
}

}  // namespace

GpRelation GpRelationForPivot(const OMProgram& prog, const Pivot& pivot) {
  const Chirotope& chi = prog.chi();
  const Element f = prog.f();
  const Element g = prog.g();
  const Tuple& l = pivot.edge;
  GpRelation rel;
  rel.A = Concat(l, {g, f});
  rel.B = Concat(l, {pivot.a, pivot.b});
  rel.C = Concat(l, {g, pivot.a});
  rel.D = Concat(l, {f, pivot.b});
  rel.E = Concat(l, {g, pivot.b});
  rel.F = Concat(l, {f, pivot.a});
  rel.sA = chi.Evaluate(rel.A);
  rel.sB = chi.Evaluate(rel.B);
  rel.sC = chi.Evaluate(rel.C);
  rel.sD = chi.Evaluate(rel.D);
  rel.sE = chi.Evaluate(rel.E);
  rel.sF = chi.Evaluate(rel.F);
  return rel;
}

std::string GpType::Name() const {
  return std::to_string(label) + (primed ? "'" : "");
}

std::span<const GpTypeRow> GpTypeTable() { return kTable; }

GpType ClassifyGp(const GpRelation& rel) {
  const std::array<Sign, 5> pattern = {rel.sA * rel.sB, rel.sC, rel.sD,
                                       rel.sE, rel.sF};
  for (const GpTypeRow& row : kTable) {
    if (row.pattern == pattern) return row.type;
  }
  std::string text;
  for (Sign s : pattern) text.push_back(ToChar(s));
  throw Error(ErrorCode::kUnlistedPattern,
              "sign pattern (AB,C,D,E,F)=" + text + " is in neither table");
}

TypeGroup GroupOf(GpType type) {
  if (type.primed) {
    switch (type.label) {
      case 1:
      case 4:
      case 5:
      case 8:
        return TypeGroup::kPositive;
      default:
        return TypeGroup::kNegative;
    }
  }
  switch (type.label % 3) {
    case 1:
      return TypeGroup::kPositive;
    case 0:
      return TypeGroup::kNegative;
    default:
      return TypeGroup::kCrossing;
  }
}

std::string ChirotopeDigest(const Chirotope& chi) {
  const std::string text = FormatChirotope(chi);
  unsigned char hash[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(text.data()), text.size(),
         hash);
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned char byte : hash) os << std::setw(2) << static_cast<int>(byte);
  return os.str();
}

bool VerificationReport::HasFailure(std::string_view reason) const {
  return std::any_of(failures.begin(), failures.end(),
                     [&](const auto& f) { return f.reason == reason; });
}

VerificationReport VerifyCertificate(const Chirotope& chi,
                                     const BfpCertificate& cert) {
  VerificationReport report;
  auto fail = [&](std::string reason, std::string detail) {
    report.failures.push_back({std::move(reason), std::move(detail)});
  };

  if (cert.n != chi.n() || cert.r != chi.rank()) {
    fail("ShapeMismatch", "certificate is for n=" + std::to_string(cert.n) +
                              " r=" + std::to_string(cert.r));
  }
  if (cert.chirotope_digest != ChirotopeDigest(chi)) {
    fail("DigestMismatch", "certificate digest does not match the chirotope");
  }
  if (cert.inequalities.empty()) {
    fail("NonEmptyRequired", "a certificate needs at least one inequality");
  }

  std::optional<SystemIndex> index;
  try {
    index.emplace(EnumerateSystem(chi));
  } catch (const Error& e) {
    fail("InvalidChirotope", e.what());
  }
  int lhs_parity = 0;
  int rhs_parity = 0;
  auto absorb = [&](const CertificateEntry& entry, bool want_equation) {
    const BiquadraticConstraint& c = entry.constraint;
    if (entry.multiplicity <= 0) {
      fail("BadMultiplicity", FormatConstraint(c));
      return;
    }
    if (c.is_equation() != want_equation || !index || !index->Contains(c)) {
      fail("NotInSystem", FormatConstraint(c));
    }
    for (const BracketMonomial& m : c.lhs) {
      report.lhs_multiset[m.subset] += entry.multiplicity;
      if (m.orientation == Sign::kNegative) lhs_parity += entry.multiplicity % 2;
    }
    for (const BracketMonomial& m : c.rhs) {
      report.rhs_multiset[m.subset] += entry.multiplicity;
      if (m.orientation == Sign::kNegative) rhs_parity += entry.multiplicity % 2;
    }
  };
  for (const auto& entry : cert.inequalities) absorb(entry, false);
  for (const auto& entry : cert.equations) absorb(entry, true);

  if (report.lhs_multiset != report.rhs_multiset) {
    fail("MultisetMismatch",
         "bracket multisets of the two products differ");
  }
  report.sign_balance =
      (lhs_parity + rhs_parity) % 2 == 0 ? Sign::kPositive : Sign::kNegative;
  if (report.sign_balance != Sign::kPositive) {
    fail("SignMismatch", "orientation signs of the two products differ");
  }
  report.valid = report.failures.empty();
  return report;
}

void AddToCertificate(BfpCertificate& cert,
                      const BiquadraticConstraint& constraint,
                      std::int64_t multiplicity) {
  auto& list = constraint.is_equation() ? cert.equations : cert.inequalities;
  for (CertificateEntry& entry : list) {
    const BiquadraticConstraint& c = entry.constraint;
    if (c.side == constraint.side && c.origin.tau == constraint.origin.tau &&
        c.origin.lambda == constraint.origin.lambda) {
      entry.multiplicity += multiplicity;
      return;
    }
  }
  list.push_back({constraint, multiplicity});
}

CycleCertificate CycleToBfp(const OMProgram& prog,
                            const NonDegenerateCycle& cycle) {
  if (!IsValidCycle(prog, cycle)) {
    throw Error(ErrorCode::kInvalidArgument,
                "not a non-degenerate cycle of this program");
  }
  const Chirotope& chi = prog.chi();
  CycleCertificate out;
  out.certificate.n = chi.n();
  out.certificate.r = chi.rank();
  out.certificate.chirotope_digest = ChirotopeDigest(chi);

  for (std::size_t i = 0; i < cycle.pivots.size(); ++i) {
    const Pivot& pivot = cycle.pivots[i];
    const GpRelation rel = GpRelationForPivot(prog, pivot);
    GpType type;
    try {
      type = ClassifyGp(rel);
    } catch (const Error& e) {
      throw Error(ErrorCode::kTypeClassificationFailed,
                  "pivot " + std::to_string(i + 1) + ": " + e.what());
    }
    out.types.push_back(type);

    Tuple lambda = {prog.g(), prog.f(), pivot.a, pivot.b};
    std::sort(lambda.begin(), lambda.end());
    const NormalizedPair np = NormalizePair(chi, pivot.edge, lambda);
    const Term cd = TermOf(np, PairOf(rel.C, rel.D));
    const Term ef = TermOf(np, PairOf(rel.E, rel.F));

    Side side;
    switch (GroupOf(type)) {
      case TypeGroup::kPositive:
        side = SideFor(ef, cd, type.primed);
        break;
      case TypeGroup::kNegative:
        side = SideFor(cd, ef, type.primed);
        break;
      case TypeGroup::kCrossing:
      default:
        side = Side::kEfLtCd;
        break;
    }
    AddToCertificate(out.certificate, MakeConstraint(np, side), 1);
  }

  const VerificationReport report = VerifyCertificate(chi, out.certificate);
  if (!report.valid) {
    std::string reasons;
    for (const auto& f : report.failures) reasons += " " + f.reason;
    throw Error(ErrorCode::kCancellationFailed,
                "assembled certificate rejected:" + reasons);
  }
  return out;
}

}  // namespace omcert
