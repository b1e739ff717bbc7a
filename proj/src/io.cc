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

#include "omcert/io.h"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "omcert/error.h"

namespace omcert {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

bool IsBlank(std::string_view line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Reads a run of decimal digits starting at `pos` as a positive int.
int ReadCount(std::string_view line, std::size_t& pos, int line_no) {
  const std::size_t start = pos;
  long long value = 0;
  while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
    value = value * 10 + (line[pos] - '0');
    if (value > 1000) {
      throw ParseError(line_no, static_cast<int>(start) + 1,
                       "count is unreasonably large");
    }
    ++pos;
  }
  if (pos == start) {
    throw ParseError(line_no, static_cast<int>(pos) + 1, "expected a decimal count");
  }
  return static_cast<int>(value);
}

void ParseHeader(const std::vector<std::string_view>& lines, int& n, int& r) {
  if (lines.empty()) throw ParseError(1, 1, "empty file");
  const std::string_view line = lines[0];
  std::size_t pos = 0;
  n = ReadCount(line, pos, 1);
  if (pos >= line.size() || line[pos] != ' ') {
    throw ParseError(1, static_cast<int>(pos) + 1, "expected a single space");
  }
  ++pos;
  r = ReadCount(line, pos, 1);
  if (pos != line.size()) {
    throw ParseError(1, static_cast<int>(pos) + 1,
                     "unexpected text after \"<n> <r>\"");
  }
  if (r < 2 || n < r) {
    throw ParseError(1, 1, "need 2 <= r <= n");
  }
}

void ExpectNothingAfter(const std::vector<std::string_view>& lines,
                        std::size_t first) {
  for (std::size_t i = first; i < lines.size(); ++i) {
    if (!IsBlank(lines[i])) {
      throw ParseError(static_cast<int>(i) + 1, 1, "unexpected trailing line");
    }
  }
}

Rational ParseRationalToken(std::string_view token, int line_no, int column) {
  std::size_t pos = 0;
  if (pos < token.size() && (token[pos] == '-' || token[pos] == '+')) ++pos;
  const std::size_t digits = pos;
  while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) ++pos;
  bool ok = pos > digits;
  if (ok && pos < token.size() && token[pos] == '/') {
    const std::size_t denominator = ++pos;
    while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) ++pos;
    ok = pos > denominator;
  }
  if (!ok || pos != token.size()) {
    throw ParseError(line_no, column,
                     "malformed rational \"" + std::string(token) + "\"");
  }
  std::string text(token[0] == '+' ? token.substr(1) : token);
  Rational value;
  value.set_str(text, 10);
  if (sgn(value.get_den()) == 0) {
    throw ParseError(line_no, column, "zero denominator");
  }
  value.canonicalize();
  return value;
}

Tuple ReadElements(const Json& node, const std::string& where, int n) {
  if (!node.is_array()) {
    throw ParseError(0, 0, where + " must be an array of elements");
  }
  Tuple out;
  for (const Json& item : node) {
    if (!item.is_number_integer()) {
      throw ParseError(0, 0, where + " must hold integers");
    }
    const int e = item.get<int>();
    if (e < 1 || e > n) {
      throw ParseError(0, 0, where + " holds element " + std::to_string(e) +
                                 " outside 1.." + std::to_string(n));
    }
    out.push_back(e);
  }
  return out;
}

Json ElementsJson(const Tuple& t) {
  Json out = Json::array();
  for (Element e : t) out.push_back(e);
  return out;
}

}  // namespace

std::string FormatChirotope(const Chirotope& chi) {
  return std::to_string(chi.n()) + " " + std::to_string(chi.rank()) + "\n" +
         chi.SignString() + "\n";
}

Chirotope ParseChirotope(std::string_view text) {
  const std::vector<std::string_view> lines = SplitLines(text);
  int n = 0;
  int r = 0;
  ParseHeader(lines, n, r);
  if (lines.size() < 2) throw ParseError(2, 1, "missing sign line");
  const std::string_view signs = lines[1];
  for (std::size_t i = 0; i < signs.size(); ++i) {
    const char c = signs[i];
    if (c != '+' && c != '-' && c != '0') {
      throw ParseError(2, static_cast<int>(i) + 1,
                       "BadCharacter '" + std::string(1, c) + "'");
    }
  }
  const std::int64_t expected = Binomial(n, r);
  if (static_cast<std::int64_t>(signs.size()) != expected) {
    throw ParseError(2, static_cast<int>(std::min<std::int64_t>(signs.size(), expected)) + 1,
                     "LengthMismatch: expected " + std::to_string(expected) +
                         " signs, got " + std::to_string(signs.size()));
  }
  ExpectNothingAfter(lines, 2);
  try {
    return Chirotope::FromSignString(n, r, signs);
  } catch (const Error& e) {
    throw ParseError(2, 1, e.what());
  }
}

std::string FormatConfiguration(const VectorConfiguration& config) {
  std::ostringstream os;
  os << config.n() << ' ' << config.rank << '\n';
  for (const Vector& column : config.columns) {
    for (std::size_t k = 0; k < column.size(); ++k) {
      if (k > 0) os << ' ';
      os << column[k].get_num().get_str() << '/' << column[k].get_den().get_str();
    }
    os << '\n';
  }
  return os.str();
}

VectorConfiguration ParseConfiguration(std::string_view text) {
  const std::vector<std::string_view> lines = SplitLines(text);
  int n = 0;
  int r = 0;
  ParseHeader(lines, n, r);
  VectorConfiguration config{r, {}};
  for (int i = 0; i < n; ++i) {
    const int line_no = i + 2;
    if (static_cast<int>(lines.size()) < line_no) {
      throw ParseError(line_no, 1, "missing coordinate line");
    }
    const std::string_view line = lines[line_no - 1];
    Vector column;
    std::size_t pos = 0;
    while (true) {
      while (pos < line.size() && line[pos] == ' ') ++pos;
      if (pos >= line.size()) break;
      std::size_t end = line.find(' ', pos);
      if (end == std::string_view::npos) end = line.size();
      if (static_cast<int>(column.size()) == r) {
        throw ParseError(line_no, static_cast<int>(pos) + 1,
                         "more than r coordinates");
      }
      column.push_back(ParseRationalToken(line.substr(pos, end - pos), line_no,
                                          static_cast<int>(pos) + 1));
      pos = end;
    }
    if (static_cast<int>(column.size()) != r) {
      throw ParseError(line_no, static_cast<int>(line.size()) + 1,
                       "expected " + std::to_string(r) + " coordinates");
    }
    config.columns.push_back(std::move(column));
  }
  ExpectNothingAfter(lines, static_cast<std::size_t>(n) + 1);
  return config;
}

Chirotope ParseChirotopeOrConfiguration(std::string_view text) {
  const std::vector<std::string_view> lines = SplitLines(text);
  // Coordinate lines hold r >= 2 numbers separated by spaces; sign lines
  // never contain a space.
  const bool is_coordinate_line =
      lines.size() >= 2 && lines[1].find_first_of(" /") != std::string_view::npos;
  if (!is_coordinate_line) return ParseChirotope(text);
  const VectorConfiguration config = ParseConfiguration(text);
  try {
    return ChirotopeFromConfiguration(config);
  } catch (const Error& e) {
    throw ParseError(2, 1, e.what());
  }
}

std::string FormatCertificate(const BfpCertificate& cert) {
  Json out;
  out["n"] = cert.n;
  out["r"] = cert.r;
  out["chirotope_digest"] = cert.chirotope_digest;
  auto entries = [](const std::vector<CertificateEntry>& list) {
    Json array = Json::array();
    for (const CertificateEntry& entry : list) {
      Json item;
      item["tau"] = ElementsJson(entry.constraint.origin.tau);
      item["lambda"] = ElementsJson(entry.constraint.origin.lambda);
      item["side"] = std::string(SideName(entry.constraint.side));
      item["multiplicity"] = entry.multiplicity;
      array.push_back(std::move(item));
    }
    return array;
  };
  out["inequalities"] = entries(cert.inequalities);
  out["equations"] = entries(cert.equations);
  return out.dump(2) + "\n";
}

BfpCertificate ParseCertificate(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, "invalid JSON");
  }
  auto field = [&](const char* name) -> const Json& {
    if (!root.is_object() || !root.contains(name)) {
      throw ParseError(0, 0, std::string("missing field \"") + name + "\"");
    }
    return root.at(name);
  };
  BfpCertificate cert;
  if (!field("n").is_number_integer() || !field("r").is_number_integer() ||
      !field("chirotope_digest").is_string()) {
    throw ParseError(0, 0, "n and r must be integers, chirotope_digest a string");
  }
  cert.n = field("n").get<int>();
  cert.r = field("r").get<int>();
  cert.chirotope_digest = field("chirotope_digest").get<std::string>();
  if (cert.r < 2 || cert.n < cert.r) {
    throw ParseError(0, 0, "need 2 <= r <= n");
  }

  auto read_list = [&](const char* name, bool equations) {
    const Json& list = field(name);
    if (!list.is_array()) {
      throw ParseError(0, 0, std::string(name) + " must be an array");
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = std::string(name) + "[" + std::to_string(i) + "]";
      const Json& item = list[i];
      if (!item.is_object() || !item.contains("tau") ||
          !item.contains("lambda") || !item.contains("side") ||
          !item.contains("multiplicity")) {
        throw ParseError(0, 0, where + " needs tau, lambda, side, multiplicity");
      }
      const Tuple tau = ReadElements(item["tau"], where + ".tau", cert.n);
      const Tuple lambda = ReadElements(item["lambda"], where + ".lambda", cert.n);
      if (static_cast<int>(tau.size()) != cert.r - 2 || lambda.size() != 4) {
        throw ParseError(0, 0, where + ": need |tau| = r - 2 and |lambda| = 4");
      }
      Side side;
      if (!item["side"].is_string() ||
          !ParseSide(item["side"].get<std::string>(), side) ||
          IsEquation(side) != equations) {
        throw ParseError(0, 0, where + ".side is not a valid " +
                                   (equations ? "equation" : "inequality") +
                                   " side");
      }
      if (!item["multiplicity"].is_number_integer()) {
        throw ParseError(0, 0, where + ".multiplicity must be an integer");
      }
      NormalizedPair origin;
      try {
        origin = PairTuples(tau, lambda);
      } catch (const Error& e) {
        throw ParseError(0, 0, where + ": " + e.what());
      }
      const std::int64_t multiplicity = item["multiplicity"].get<std::int64_t>();
      auto& target = equations ? cert.equations : cert.inequalities;
      target.push_back({MakeConstraint(origin, side), multiplicity});
    }
  };
  read_list("inequalities", false);
  read_list("equations", true);
  return cert;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  }
  out << contents;
}

}  // namespace omcert
