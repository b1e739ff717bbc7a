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

#ifndef OMCERT_IO_H_
#define OMCERT_IO_H_

#include <string>
#include <string_view>

#include "omcert/certificate.h"
#include "omcert/chirotope.h"
#include "omcert/configuration.h"

namespace omcert {

// Chirotope file:
//   <n> <r>\n
//   <C(n,r) characters over + - 0>\n
std::string FormatChirotope(const Chirotope& chi);
Chirotope ParseChirotope(std::string_view text);

// Configuration file:
//   <n> <r>\n
//   then n lines of r rationals "p/q" (or integers) separated by spaces.
std::string FormatConfiguration(const VectorConfiguration& config);
VectorConfiguration ParseConfiguration(std::string_view text);

// Accepts either file kind; configurations are converted to their chirotope.
Chirotope ParseChirotopeOrConfiguration(std::string_view text);

// Certificate JSON:
//   {"n", "r", "chirotope_digest",
//    "inequalities": [{"tau", "lambda", "side", "multiplicity"}, ...],
//    "equations":    [...]}
std::string FormatCertificate(const BfpCertificate& certificate);
BfpCertificate ParseCertificate(std::string_view text);

// Throws ParseError (line 0) if the file cannot be read.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace omcert

#endif  // OMCERT_IO_H_
