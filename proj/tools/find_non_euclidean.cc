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

// Searches single-basis sign flips of random realizable configurations for
// non-Euclidean chirotopes and writes each hit as a chirotope file.
//
//   find_non_euclidean --n 8 --r 4 --seeds 200 --out-dir DIR [--limit 1]

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "omcert/chirotope.h"
#include "omcert/configuration.h"
#include "omcert/io.h"
#include "omcert/omp.h"

int main(int argc, char** argv) {
  int n = 8;
  int r = 4;
  int seeds = 100;
  int first_seed = 1;
  int range = 20;
  int limit = 1;
  std::string out_dir = ".";
  CLI::App app{"Mutation search for non-Euclidean chirotopes"};
  app.add_option("--n", n);
  app.add_option("--r", r);
  app.add_option("--seeds", seeds);
  app.add_option("--first-seed", first_seed);
  app.add_option("--range", range);
  app.add_option("--limit", limit, "stop after this many hits");
  app.add_option("--out-dir", out_dir);
  CLI11_PARSE(app, argc, argv);

  int hits = 0;
  for (int seed = first_seed; seed < first_seed + seeds && hits < limit; ++seed) {
    const omcert::Chirotope base = omcert::ChirotopeFromConfiguration(
        omcert::RandomConfiguration(n, r, seed, range));
    for (const omcert::Tuple& subset : omcert::Combinations(n, r)) {
      const omcert::Sign s = base.SignOfSubset(subset);
      if (omcert::IsZero(s)) continue;
      const omcert::Chirotope flipped = base.WithSign(subset, -s);
      if (!omcert::CheckAxioms(flipped).ok()) continue;
      if (omcert::IsEuclidean(flipped).euclidean) continue;
      const std::string path = (std::filesystem::path(out_dir) /
                                ("mutant_n" + std::to_string(n) + "_r" +
                                 std::to_string(r) + "_seed" +
                                 std::to_string(seed) + ".chi"))
                                   .string();
      omcert::WriteFile(path, omcert::FormatChirotope(flipped));
      std::cout << "seed " << seed << " flip {" << omcert::JoinElements(subset, ",")
                << "} -> " << path << '\n';
      if (++hits >= limit) break;
    }
  }
  std::cout << hits << " non-Euclidean chirotope(s) found\n";
  return hits > 0 ? 0 : 1;
}
