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

#include "omcert/rational_lp.h"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "omcert/error.h"

namespace omcert {

namespace {

std::string VariableName(const Tuple& subset) {
  return "x_" + JoinElements(subset, "_");
}

// Dense phase-one tableau for  A p = beta, p >= 0, beta >= 0,  with one
// artificial per row. Entering and leaving variables follow Bland's rule.
class PhaseOneTableau {
 public:
  PhaseOneTableau(std::vector<std::vector<Rational>> a, std::vector<Rational> beta)
      : rows_(static_cast<int>(a.size())),
        structural_(a.empty() ? 0 : static_cast<int>(a[0].size())),
        columns_(structural_ + rows_) {
    table_.resize(rows_);
    basis_.resize(rows_);
    cost_row_.assign(columns_ + 1, 0);
    for (int i = 0; i < rows_; ++i) {
      table_[i] = std::move(a[i]);
      table_[i].resize(columns_ + 1);
      table_[i][structural_ + i] = 1;
      table_[i][columns_] = beta[i];
      basis_[i] = structural_ + i;
      for (int j = 0; j < structural_; ++j) cost_row_[j] -= table_[i][j];
      cost_row_[columns_] -= beta[i];
    }
  }

  void Solve() {
    while (true) {
      int entering = -1;
      for (int j = 0; j < columns_; ++j) {
        if (sgn(cost_row_[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return;
      int leaving = -1;
      Rational best_ratio;
      for (int i = 0; i < rows_; ++i) {
        if (sgn(table_[i][entering]) <= 0) continue;
        Rational ratio = table_[i][columns_] / table_[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      // Phase one is bounded below by zero, so a leaving row always exists.
      if (leaving < 0) throw std::logic_error("phase one reported unbounded");
      Pivot(leaving, entering);
    }
  }

  // Sum of the artificials at the current basis.
  Rational Objective() const { return -cost_row_[columns_]; }

  // Basic values of the structural columns.
  std::vector<Rational> StructuralValues() const {
    std::vector<Rational> values(structural_, 0);
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < structural_) values[basis_[i]] = table_[i][columns_];
    }
    return values;
  }

  // Simplex multipliers w = c_B B^{-1}; artificial i has reduced cost 1 - w_i.
  std::vector<Rational> Multipliers() const {
    std::vector<Rational> w(rows_);
    for (int i = 0; i < rows_; ++i) w[i] = 1 - cost_row_[structural_ + i];
    return w;
  }

 private:
  void Pivot(int row, int column) {
    std::vector<Rational>& pivot_row = table_[row];
    const Rational scale = pivot_row[column];
    std::vector<int> nonzero;
    for (int j = 0; j <= columns_; ++j) {
      if (sgn(pivot_row[j]) != 0) {
        pivot_row[j] /= scale;
        nonzero.push_back(j);
      }
    }
    auto eliminate = [&](std::vector<Rational>& target) {
      if (sgn(target[column]) == 0) return;
      const Rational factor = target[column];
      for (int j : nonzero) target[j] -= factor * pivot_row[j];
    };
    for (int i = 0; i < rows_; ++i) {
      if (i != row) eliminate(table_[i]);
    }
    eliminate(cost_row_);
    basis_[row] = column;
  }

  int rows_;
  int structural_;
  int columns_;
  std::vector<std::vector<Rational>> table_;
  std::vector<Rational> cost_row_;
  std::vector<int> basis_;
};

Rational RowValue(const LinearRow& row, const std::vector<Rational>& x) {
  Rational value = 0;
  for (const auto& [var, coefficient] : row.coefficients) {
    value += coefficient * x[var];
  }
  return value;
}

Side Reversed(Side side) {
  switch (side) {
    case Side::kAbEqCd:
      return Side::kCdEqAb;
    case Side::kEfEqCd:
      return Side::kCdEqEf;
    case Side::kCdEqAb:
      return Side::kAbEqCd;
    case Side::kCdEqEf:
      return Side::kEfEqCd;
    default:
      break;
  }
  return side;
}

}  // namespace

LinearSystem EncodeSystem(const Chirotope& chi,
                          const BiquadraticSystem& system) {
  LinearSystem ls;
  std::map<Tuple, int> index;
  auto collect = [&](const BiquadraticConstraint& c) {
    for (const auto* side : {&c.lhs, &c.rhs}) {
      for (const BracketMonomial& m : *side) {
        if (IsZero(chi.SignOfSubset(m.subset))) {
          throw Error(ErrorCode::kZeroBracket,
                      FormatBracket(m.subset) + " vanishes in " +
                          FormatConstraint(c));
        }
        index.emplace(m.subset, 0);
      }
    }
  };
  for (const auto& c : system.inequalities) collect(c);
  for (const auto& c : system.equations) collect(c);
  for (auto& [subset, id] : index) {
    id = static_cast<int>(ls.variables.size());
    ls.variables.push_back(subset);
  }

  auto add_row = [&](const BiquadraticConstraint& c, ConstraintRef origin) {
    std::map<int, Rational> coefficients;
    for (const BracketMonomial& m : c.lhs) coefficients[index.at(m.subset)] += 1;
    for (const BracketMonomial& m : c.rhs) coefficients[index.at(m.subset)] -= 1;
    LinearRow row;
    for (auto& [var, value] : coefficients) {
      if (sgn(value) != 0) row.coefficients.emplace_back(var, value);
    }
    row.relation = origin.equation ? Relation::kEqual : Relation::kLessEqual;
    row.rhs = origin.equation ? 0 : -1;
    row.origin = origin;
    ls.rows.push_back(std::move(row));
  };
  for (std::size_t i = 0; i < system.inequalities.size(); ++i) {
    add_row(system.inequalities[i], {false, static_cast<int>(i)});
  }
  for (std::size_t i = 0; i < system.equations.size(); ++i) {
    add_row(system.equations[i], {true, static_cast<int>(i)});
  }
  return ls;
}

bool SatisfiesAll(const LinearSystem& ls, const std::vector<Rational>& x) {
  if (x.size() != ls.variables.size()) return false;
  for (const LinearRow& row : ls.rows) {
    const Rational value = RowValue(row, x);
    if (row.relation == Relation::kEqual ? value != row.rhs : value > row.rhs) {
      return false;
    }
  }
  return true;
}

bool IsFarkasWitness(const LinearSystem& ls, const FarkasCertificate& cert) {
  if (cert.multipliers.size() != ls.rows.size()) return false;
  std::vector<Rational> combined(ls.variables.size(), 0);
  Rational rhs = 0;
  for (std::size_t i = 0; i < ls.rows.size(); ++i) {
    const Rational& y = cert.multipliers[i];
    if (ls.rows[i].relation == Relation::kLessEqual && sgn(y) < 0) return false;
    if (sgn(y) == 0) continue;
    for (const auto& [var, coefficient] : ls.rows[i].coefficients) {
      combined[var] += y * coefficient;
    }
    rhs += y * ls.rows[i].rhs;
  }
  for (const Rational& value : combined) {
    if (sgn(value) != 0) return false;
  }
  return sgn(rhs) < 0;
}

FeasibilityResult SolveFeasibility(const LinearSystem& ls) {
  // Farkas alternative: find multipliers y >= 0 (<= rows) and free z (= rows)
  // with  sum y a + sum z a = 0  and  sum y b + sum z b = -1.
  const int vars = static_cast<int>(ls.variables.size());
  std::vector<int> column_row;     // row behind each structural column
  std::vector<int> column_sign;    // +1, or -1 for the negative part of z
  for (int i = 0; i < static_cast<int>(ls.rows.size()); ++i) {
    column_row.push_back(i);
    column_sign.push_back(1);
    if (ls.rows[i].relation == Relation::kEqual) {
      column_row.push_back(i);
      column_sign.push_back(-1);
    }
  }
  const int structural = static_cast<int>(column_row.size());
  std::vector<std::vector<Rational>> a(vars + 1,
                                       std::vector<Rational>(structural, 0));
  for (int j = 0; j < structural; ++j) {
    const LinearRow& row = ls.rows[column_row[j]];
    for (const auto& [var, coefficient] : row.coefficients) {
      a[var][j] = column_sign[j] * coefficient;
    }
    a[vars][j] = -column_sign[j] * row.rhs;
  }
  std::vector<Rational> beta(vars + 1, 0);
  beta[vars] = 1;

  PhaseOneTableau tableau(std::move(a), std::move(beta));
  tableau.Solve();

  if (sgn(tableau.Objective()) == 0) {
    const std::vector<Rational> p = tableau.StructuralValues();
    FarkasCertificate cert;
    cert.multipliers.assign(ls.rows.size(), 0);
    for (int j = 0; j < structural; ++j) {
      cert.multipliers[column_row[j]] += column_sign[j] * p[j];
    }
    if (!IsFarkasWitness(ls, cert)) {
      throw std::logic_error("simplex produced an invalid Farkas witness");
    }
    return Infeasible{std::move(cert)};
  }

  const std::vector<Rational> w = tableau.Multipliers();
  const Rational& t = w[vars];
  std::vector<Rational> x(vars);
  for (int k = 0; k < vars; ++k) x[k] = w[k] / t;
  if (!SatisfiesAll(ls, x)) {
    throw std::logic_error("simplex produced an infeasible assignment");
  }
  return Feasible{std::move(x)};
}

BfpCertificate BfpFromFarkas(const Chirotope& chi,
                             const BiquadraticSystem& system,
                             const LinearSystem& ls,
                             const FarkasCertificate& cert) {
  if (!IsFarkasWitness(ls, cert)) {
    throw Error(ErrorCode::kInvalidArgument, "not a Farkas witness");
  }
  mpz_class lcm = 1;
  for (const Rational& y : cert.multipliers) {
    if (sgn(y) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), y.get_den_mpz_t());
  }
  std::vector<mpz_class> scaled(cert.multipliers.size());
  mpz_class gcd = 0;
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    const Rational value = cert.multipliers[i] * lcm;
    scaled[i] = value.get_num();
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled[i].get_mpz_t());
  }

  BfpCertificate out;
  out.n = chi.n();
  out.r = chi.rank();
  out.chirotope_digest = ChirotopeDigest(chi);
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    if (sgn(scaled[i]) == 0) continue;
    const mpz_class count = abs(scaled[i]) / gcd;
    if (!count.fits_slong_p()) {
      throw Error(ErrorCode::kCancellationFailed, "multiplicity overflow");
    }
    const ConstraintRef origin = ls.rows[i].origin;
    BiquadraticConstraint constraint =
        origin.equation ? system.equations[origin.index]
                        : system.inequalities[origin.index];
    if (origin.equation && sgn(scaled[i]) < 0) {
      constraint = MakeConstraint(constraint.origin, Reversed(constraint.side));
    }
    AddToCertificate(out, constraint, count.get_si());
  }
  if (out.inequalities.empty()) {
    throw Error(ErrorCode::kEmptyInequalitySupport,
                "every inequality multiplier is zero");
  }
  const VerificationReport report = VerifyCertificate(chi, out);
  if (!report.valid) {
    throw Error(ErrorCode::kCancellationFailed,
                "certificate from Farkas multipliers did not verify");
  }
  return out;
}

void WriteLpFormat(std::ostream& os, const LinearSystem& ls) {
  os << "\\ log-magnitude encoding of a biquadratic system\n";
  os << "Minimize\n obj:";
  if (!ls.variables.empty()) os << " 0 " << VariableName(ls.variables[0]);
  os << "\nSubject To\n";
  for (std::size_t i = 0; i < ls.rows.size(); ++i) {
    const LinearRow& row = ls.rows[i];
    os << " c" << i + 1 << ":";
    bool first = true;
    for (const auto& [var, coefficient] : row.coefficients) {
      const bool negative = sgn(coefficient) < 0;
      os << (negative ? " - " : (first ? " " : " + "));
      const Rational magnitude = abs(coefficient);
      if (magnitude != 1) os << magnitude.get_str() << ' ';
      os << VariableName(ls.variables[var]);
      first = false;
    }
    if (first) os << " 0 " << (ls.variables.empty() ? "x_none" : VariableName(ls.variables[0]));
    os << (row.relation == Relation::kEqual ? " = " : " <= ")
       << row.rhs.get_str() << '\n';
  }
  os << "Bounds\n";
  for (const Tuple& v : ls.variables) os << ' ' << VariableName(v) << " free\n";
  os << "End\n";
}

}  // namespace omcert
