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

#ifndef OMCERT_SIGN_H_
#define OMCERT_SIGN_H_

#include <cstdint>
#include <ostream>

namespace omcert {

// Value of a chirotope on an ordered tuple.
enum class Sign : std::int8_t { kNegative = -1, kZero = 0, kPositive = 1 };

constexpr int ToInt(Sign s) { return static_cast<int>(s); }

constexpr Sign SignOf(int v) {
  return v > 0 ? Sign::kPositive : (v < 0 ? Sign::kNegative : Sign::kZero);
}

constexpr Sign operator-(Sign s) { return SignOf(-ToInt(s)); }

constexpr Sign operator*(Sign a, Sign b) { return SignOf(ToInt(a) * ToInt(b)); }

constexpr Sign& operator*=(Sign& a, Sign b) { return a = a * b; }

constexpr bool IsZero(Sign s) { return s == Sign::kZero; }

constexpr char ToChar(Sign s) {
  return s == Sign::kPositive ? '+' : (s == Sign::kNegative ? '-' : '0');
}

inline std::ostream& operator<<(std::ostream& os, Sign s) {
  return os << ToChar(s);
}

}  // namespace omcert

#endif  // OMCERT_SIGN_H_
