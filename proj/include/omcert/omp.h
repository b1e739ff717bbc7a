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

#ifndef OMCERT_OMP_H_
#define OMCERT_OMP_H_

#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "omcert/chirotope.h"
#include "omcert/combinatorics.h"

namespace omcert {

// An oriented matroid program: g is the hyperplane at infinity, f the
// objective.
class OMProgram {
 public:
  // Throws kInvalidArgument unless f != g and both lie in 1..n.
  OMProgram(Chirotope chi, Element f, Element g);

  const Chirotope& chi() const { return chi_; }
  Element f() const { return f_; }
  Element g() const { return g_; }

 private:
  Chirotope chi_;
  Element f_;
  Element g_;
};

// Sorted (r-1)-subset of E - {f, g} whose union with g is a basis.
using AffineBasis = Tuple;

// Sign vector over the ground set, indexed by element.
struct Cocircuit {
  std::vector<Sign> signs;  // signs[e - 1]

  Sign operator[](Element e) const { return signs[e - 1]; }

  friend bool operator==(const Cocircuit&, const Cocircuit&) = default;
};

enum class PivotKind {
  kDegenerate,
  kHorizontal,
  kStrictlyIncreasing,
  kStrictlyDecreasing,
};

// D, H, S, or X for decreasing.
char PivotKindCode(PivotKind kind);

struct Pivot {
  Tuple edge;  // L, sorted
  Element a = 0;
  Element b = 0;
  AffineBasis from;  // L + a
  AffineBasis to;    // L + b
  PivotKind kind = PivotKind::kDegenerate;
};

std::vector<AffineBasis> AffineBases(const OMProgram& prog);

bool IsAffineBasis(const OMProgram& prog, std::span<const Element> basis);

// The vertex v(B): sign(e) = s * chi(b_1, ..., b_{r-1}, e), with s fixing the
// g entry to +. Throws kNotAffineBasis.
Cocircuit Vertex(const OMProgram& prog, std::span<const Element> basis);

// Kind of the pivot L + a -> L + b, read off the sign product
//   chi(L,g,f) chi(L,a,b) chi(L,g,a) chi(L,g,b).
// chi(L,a,b) = 0 takes precedence (degenerate), then chi(L,g,f) = 0
// (horizontal); otherwise the product is +1 or -1. Throws kNotAPivot.
Pivot ClassifyPivot(const OMProgram& prog, std::span<const Element> edge,
                    Element a, Element b);

// The direction d of the pivot: the cocircuit vanishing on L + g, scaled so
// d(a) = v(L + b)(a). Derived from Vertex, independently of ClassifyPivot.
// Throws kDegeneratePivot when chi(L,a,b) = 0 and kNotAPivot on bad input.
Cocircuit PivotDirection(const OMProgram& prog, std::span<const Element> edge,
                         Element a, Element b);

// Nodes are the affine bases. Strictly increasing pivots appear as directed
// edges, degenerate and horizontal pivots in both directions, strictly
// decreasing pivots not at all.
struct PivotGraph {
  std::vector<AffineBasis> nodes;
  std::vector<Pivot> edges;
  std::vector<std::vector<int>> out_edges;  // edge indices per node
  std::map<AffineBasis, int> node_index;
};

PivotGraph BuildPivotGraph(const OMProgram& prog);

// Subgraph on the bases whose vertex is nonzero at f.
PivotGraph RestrictToNonzeroObjective(const OMProgram& prog,
                                      const PivotGraph& graph);

// Strongly connected component id per node.
std::vector<int> StronglyConnectedComponents(const PivotGraph& graph);

// B_1 -> ... -> B_k with B_1 = B_k, so pivots.size() == bases.size() - 1.
struct NonDegenerateCycle {
  std::vector<AffineBasis> bases;
  std::vector<Pivot> pivots;
};

// For every strictly increasing edge u -> v inside a strongly connected
// component, the cycle u -> v -> ... -> u closed by a shortest path. Edges are
// taken in graph order, so output is deterministic.
std::vector<NonDegenerateCycle> CandidateCycles(const PivotGraph& graph);

std::optional<NonDegenerateCycle> FindNonDegenerateCycle(
    const OMProgram& prog);

// Re-derives every pivot kind from the chirotope and checks closure, pivot
// adjacency, admissible kinds and the presence of a strictly increasing pivot.
bool IsValidCycle(const OMProgram& prog, const NonDegenerateCycle& cycle);

struct EuclideanWitness {
  Element f = 0;
  Element g = 0;
  NonDegenerateCycle cycle;
};

struct EuclideanResult {
  bool euclidean = true;
  std::optional<EuclideanWitness> witness;
};

// Scans ordered pairs (f, g) lexicographically and stops at the first cycle.
// `only_f` / `only_g` restrict the scan.
EuclideanResult IsEuclidean(const Chirotope& chi,
                            std::optional<Element> only_f = std::nullopt,
                            std::optional<Element> only_g = std::nullopt);

// "f=<i> g=<j>" then "L={...} a=<..> b=<..> kind=<D|H|S>" per pivot.
void WriteWitness(std::ostream& os, const EuclideanWitness& witness);

}  // namespace omcert

#endif  // OMCERT_OMP_H_
