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

#include "omcert/omp.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

#include "omcert/error.h"

namespace omcert {

namespace {

bool Contains(std::span<const Element> sorted, Element x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

AffineBasis WithElement(std::span<const Element> edge, Element x) {
  AffineBasis basis(edge.begin(), edge.end());
  basis.insert(std::upper_bound(basis.begin(), basis.end(), x), x);
  return basis;
}

void CheckPivotInput(const OMProgram& prog, std::span<const Element> edge,
                     Element a, Element b) {
  const int n = prog.chi().n();
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kNotAPivot, "L={" + JoinElements(edge, ",") +
                                           "} a=" + std::to_string(a) +
                                           " b=" + std::to_string(b) + ": " +
                                           why);
  };
  if (static_cast<int>(edge.size()) != prog.chi().rank() - 2) {
    fail("edge must have r - 2 elements");
  }
  if (!std::is_sorted(edge.begin(), edge.end()) ||
      std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
    fail("edge must be sorted without repeats");
  }
  for (Element x : edge) {
    if (x < 1 || x > n || x == prog.f() || x == prog.g()) {
      fail("edge element outside E - {f, g}");
    }
  }
  if (a == b) fail("a == b");
  for (Element x : {a, b}) {
    if (x < 1 || x > n || x == prog.f() || x == prog.g() ||
        Contains(edge, x)) {
      fail("a and b must lie in E - {f, g} - L");
    }
  }
  if (!IsAffineBasis(prog, WithElement(edge, a)) ||
      !IsAffineBasis(prog, WithElement(edge, b))) {
    fail("L + a and L + b must both be affine bases");
  }
}

PivotGraph GraphFrom(std::vector<AffineBasis> nodes,
                     const std::vector<Pivot>& candidate_edges) {
  PivotGraph graph;
  graph.nodes = std::move(nodes);
  for (int i = 0; i < static_cast<int>(graph.nodes.size()); ++i) {
    graph.node_index.emplace(graph.nodes[i], i);
  }
  graph.out_edges.resize(graph.nodes.size());
  for (const Pivot& p : candidate_edges) {
    auto from = graph.node_index.find(p.from);
    auto to = graph.node_index.find(p.to);
    if (from == graph.node_index.end() || to == graph.node_index.end()) {
      continue;
    }
    graph.out_edges[from->second].push_back(
        static_cast<int>(graph.edges.size()));
    graph.edges.push_back(p);
  }
  return graph;
}

}  // namespace

OMProgram::OMProgram(Chirotope chi, Element f, Element g)
    : chi_(std::move(chi)), f_(f), g_(g) {
  if (f_ == g_ || f_ < 1 || g_ < 1 || f_ > chi_.n() || g_ > chi_.n()) {
    throw Error(ErrorCode::kInvalidArgument,
                "need distinct f, g in 1.." + std::to_string(chi_.n()));
  }
}

char PivotKindCode(PivotKind kind) {
  switch (kind) {
    case PivotKind::kDegenerate:
      return 'D';
    case PivotKind::kHorizontal:
      return 'H';
    case PivotKind::kStrictlyIncreasing:
      return 'S';
    case PivotKind::kStrictlyDecreasing:
      break;
  }
  return 'X';
}

bool IsAffineBasis(const OMProgram& prog, std::span<const Element> basis) {
  const Chirotope& chi = prog.chi();
  if (static_cast<int>(basis.size()) != chi.rank() - 1) return false;
  for (Element x : basis) {
    if (x < 1 || x > chi.n() || x == prog.f() || x == prog.g()) return false;
  }
  return chi.IsBasis(Concat(basis, {prog.g()}));
}

std::vector<AffineBasis> AffineBases(const OMProgram& prog) {
  Tuple pool;
  for (Element x = 1; x <= prog.chi().n(); ++x) {
    if (x != prog.f() && x != prog.g()) pool.push_back(x);
  }
  std::vector<AffineBasis> out;
  for (Tuple& candidate : Combinations(pool, prog.chi().rank() - 1)) {
    if (prog.chi().IsBasis(Concat(candidate, {prog.g()}))) {
      out.push_back(std::move(candidate));
    }
  }
  return out;
}

Cocircuit Vertex(const OMProgram& prog, std::span<const Element> basis) {
  if (!IsAffineBasis(prog, basis)) {
    throw Error(ErrorCode::kNotAffineBasis,
                "{" + JoinElements(basis, ",") + "} is not an affine basis");
  }
  const Chirotope& chi = prog.chi();
  const Sign scale = chi.Evaluate(Concat(basis, {prog.g()}));
  Cocircuit v;
  v.signs.reserve(chi.n());
  for (Element e = 1; e <= chi.n(); ++e) {
    v.signs.push_back(scale * chi.Evaluate(Concat(basis, {e})));
  }
  return v;
}

Pivot ClassifyPivot(const OMProgram& prog, std::span<const Element> edge,
                    Element a, Element b) {
  CheckPivotInput(prog, edge, a, b);
  const Chirotope& chi = prog.chi();
  const Element f = prog.f();
  const Element g = prog.g();
  Pivot p;
  p.edge.assign(edge.begin(), edge.end());
  p.a = a;
  p.b = b;
  p.from = WithElement(edge, a);
  p.to = WithElement(edge, b);

  const Sign gf = chi.Evaluate(Concat(edge, {g, f}));
  const Sign ab = chi.Evaluate(Concat(edge, {a, b}));
  if (IsZero(ab)) {
    p.kind = PivotKind::kDegenerate;
  } else if (IsZero(gf)) {
    p.kind = PivotKind::kHorizontal;
  } else {
    const Sign product = gf * ab * chi.Evaluate(Concat(edge, {g, a})) *
                         chi.Evaluate(Concat(edge, {g, b}));
    p.kind = product == Sign::kPositive ? PivotKind::kStrictlyIncreasing
                                        : PivotKind::kStrictlyDecreasing;
  }
  return p;
}

Cocircuit PivotDirection(const OMProgram& prog, std::span<const Element> edge,
                         Element a, Element b) {
  CheckPivotInput(prog, edge, a, b);
  const Chirotope& chi = prog.chi();
  if (IsZero(chi.Evaluate(Concat(edge, {a, b})))) {
    throw Error(ErrorCode::kDegeneratePivot,
                "L + a + b is dependent; the direction is undefined");
  }
  const Cocircuit target = Vertex(prog, WithElement(edge, b));
  const Sign scale = target[a] * chi.Evaluate(Concat(edge, {prog.g(), a}));
  Cocircuit d;
  d.signs.reserve(chi.n());
  for (Element e = 1; e <= chi.n(); ++e) {
    d.signs.push_back(scale * chi.Evaluate(Concat(edge, {prog.g(), e})));
  }
  return d;
}

PivotGraph BuildPivotGraph(const OMProgram& prog) {
  std::vector<AffineBasis> nodes = AffineBases(prog);
  std::map<AffineBasis, int> index;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    index.emplace(nodes[i], i);
  }
  std::vector<Pivot> edges;
  const int n = prog.chi().n();
  for (const AffineBasis& from : nodes) {
    for (Element a : from) {
      Tuple edge;
      for (Element x : from) {
        if (x != a) edge.push_back(x);
      }
      for (Element b = 1; b <= n; ++b) {
        if (b == prog.f() || b == prog.g() || Contains(from, b)) continue;
        if (!index.contains(WithElement(edge, b))) continue;
        Pivot p = ClassifyPivot(prog, edge, a, b);
        if (p.kind != PivotKind::kStrictlyDecreasing) {
          edges.push_back(std::move(p));
        }
      }
    }
  }
  return GraphFrom(std::move(nodes), edges);
}

PivotGraph RestrictToNonzeroObjective(const OMProgram& prog,
                                      const PivotGraph& graph) {
  std::vector<AffineBasis> kept;
  for (const AffineBasis& basis : graph.nodes) {
    if (!IsZero(Vertex(prog, basis)[prog.f()])) kept.push_back(basis);
  }
  return GraphFrom(std::move(kept), graph.edges);
}

std::vector<int> StronglyConnectedComponents(const PivotGraph& graph) {
  const int size = static_cast<int>(graph.nodes.size());
  std::vector<int> component(size, -1);
  std::vector<int> order(size, -1);
  std::vector<int> low(size, 0);
  std::vector<bool> on_stack(size, false);
  std::vector<int> stack;
  int counter = 0;
  int components = 0;

  std::function<void(int)> visit = [&](int u) {
    order[u] = low[u] = counter++;
    stack.push_back(u);
    on_stack[u] = true;
    for (int e : graph.out_edges[u]) {
      const int v = graph.node_index.at(graph.edges[e].to);
      if (order[v] < 0) {
        visit(v);
        low[u] = std::min(low[u], low[v]);
      } else if (on_stack[v]) {
        low[u] = std::min(low[u], order[v]);
      }
    }
    if (low[u] == order[u]) {
      while (true) {
        const int w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component[w] = components;
        if (w == u) break;
      }
      ++components;
    }
  };
  for (int u = 0; u < size; ++u) {
    if (order[u] < 0) visit(u);
  }
  return component;
}

std::vector<NonDegenerateCycle> CandidateCycles(const PivotGraph& graph) {
  std::vector<NonDegenerateCycle> cycles;
  const std::vector<int> component = StronglyConnectedComponents(graph);
  for (const Pivot& first : graph.edges) {
    if (first.kind != PivotKind::kStrictlyIncreasing) continue;
    const int start = graph.node_index.at(first.from);
    const int next = graph.node_index.at(first.to);
    if (component[start] != component[next]) continue;

    // Shortest path next -> start within the component.
    std::vector<int> via_edge(graph.nodes.size(), -1);
    std::vector<bool> seen(graph.nodes.size(), false);
    std::deque<int> queue{next};
    seen[next] = true;
    while (!queue.empty() && !seen[start]) {
      const int u = queue.front();
      queue.pop_front();
      for (int e : graph.out_edges[u]) {
        const int v = graph.node_index.at(graph.edges[e].to);
        if (seen[v] || component[v] != component[start]) continue;
        seen[v] = true;
        via_edge[v] = e;
        queue.push_back(v);
      }
    }
    std::vector<Pivot> tail;
    for (int v = start; v != next;) {
      const Pivot& p = graph.edges[via_edge[v]];
      tail.push_back(p);
      v = graph.node_index.at(p.from);
    }
    std::reverse(tail.begin(), tail.end());

    NonDegenerateCycle cycle;
    cycle.pivots.push_back(first);
    cycle.pivots.insert(cycle.pivots.end(), tail.begin(), tail.end());
    for (const Pivot& p : cycle.pivots) cycle.bases.push_back(p.from);
    cycle.bases.push_back(first.from);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::optional<NonDegenerateCycle> FindNonDegenerateCycle(
    const OMProgram& prog) {
  std::vector<NonDegenerateCycle> cycles =
      CandidateCycles(BuildPivotGraph(prog));
  if (cycles.empty()) return std::nullopt;
  return std::move(cycles.front());
}

bool IsValidCycle(const OMProgram& prog, const NonDegenerateCycle& cycle) {
  if (cycle.bases.size() < 2 ||
      cycle.pivots.size() + 1 != cycle.bases.size() ||
      cycle.bases.front() != cycle.bases.back()) {
    return false;
  }
  bool increasing = false;
  for (std::size_t i = 0; i < cycle.pivots.size(); ++i) {
    const Pivot& p = cycle.pivots[i];
    if (p.from != cycle.bases[i] || p.to != cycle.bases[i + 1]) return false;
    Pivot fresh;
    try {
      fresh = ClassifyPivot(prog, p.edge, p.a, p.b);
    } catch (const Error&) {
      return false;
    }
    if (fresh.kind != p.kind || fresh.from != p.from || fresh.to != p.to ||
        fresh.kind == PivotKind::kStrictlyDecreasing) {
      return false;
    }
    increasing = increasing || fresh.kind == PivotKind::kStrictlyIncreasing;
  }
  return increasing;
}

EuclideanResult IsEuclidean(const Chirotope& chi, std::optional<Element> only_f,
                            std::optional<Element> only_g) {
  EuclideanResult result;
  for (Element f = 1; f <= chi.n(); ++f) {
    if (only_f && *only_f != f) continue;
    for (Element g = 1; g <= chi.n(); ++g) {
      if (g == f || (only_g && *only_g != g)) continue;
      const OMProgram prog(chi, f, g);
      if (auto cycle = FindNonDegenerateCycle(prog)) {
        result.euclidean = false;
        result.witness = EuclideanWitness{f, g, std::move(*cycle)};
        return result;
      }
    }
  }
  return result;
}

void WriteWitness(std::ostream& os, const EuclideanWitness& witness) {
  os << "f=" << witness.f << " g=" << witness.g << '\n';
  for (const Pivot& p : witness.cycle.pivots) {
    os << "L={" << JoinElements(p.edge, ",") << "} a=" << p.a << " b=" << p.b
       << " kind=" << PivotKindCode(p.kind) << '\n';
  }
}

}  // namespace omcert
