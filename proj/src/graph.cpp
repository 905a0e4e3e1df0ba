// Copyright 2026 The walkdist Authors
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

#include "walkdist/graph.hpp"

#include "walkdist/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace walkdist {

namespace {

template <class S>
bool is_finite(const S& x) {
  if constexpr (is_exact_v<S>) {
    (void)x;
    return true;
  } else {
    return std::isfinite(x);
  }
}

std::map<VertexId, std::size_t> index_vertices(const std::vector<VertexId>& vertices) {
  if (vertices.empty()) throw Error(ErrorCode::empty_graph, "graph has no vertices");
  std::map<VertexId, std::size_t> index;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (!index.emplace(vertices[k], k).second) {
      throw Error(ErrorCode::invalid_parameter, "duplicate vertex " + std::to_string(vertices[k]));
    }
  }
  return index;
}

[[noreturn]] void unknown_vertex(VertexId v) {
  throw Error(ErrorCode::invalid_index, "unknown vertex " + std::to_string(v));
}

}  // namespace

// ---------------------------------------------------------------------------
// BasicMultigraph

template <class S>
BasicMultigraph<S>::BasicMultigraph(std::vector<VertexId> vertices, std::vector<Edge<S>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  index_ = index_vertices(vertices_);
  incidence_.resize(vertices_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge<S>& e = edges_[k];
    if (!edge_index_.emplace(e.id, k).second) {
      throw Error(ErrorCode::invalid_parameter, "duplicate edge id " + std::to_string(e.id));
    }
    if (!has_vertex(e.u)) unknown_vertex(e.u);
    if (!has_vertex(e.v)) unknown_vertex(e.v);
    if (!is_finite(e.weight) || !(e.weight > S(0))) {
      throw Error(ErrorCode::invalid_parameter,
                  "edge " + std::to_string(e.id) + " must have a positive finite weight");
    }
    incidence_[index_.at(e.u)].push_back(e.id);
    if (!e.is_loop()) incidence_[index_.at(e.v)].push_back(e.id);
  }
}

template <class S>
BasicMultigraph<S> BasicMultigraph<S>::from_edge_list(
    int n, const std::vector<std::tuple<VertexId, VertexId, S>>& edges) {
  if (n < 1) throw Error(ErrorCode::empty_graph, "graph has no vertices");
  std::vector<VertexId> vertices(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) vertices[static_cast<std::size_t>(v)] = v + 1;
  std::vector<Edge<S>> list;
  list.reserve(edges.size());
  int id = 0;
  for (const auto& [u, v, w] : edges) list.push_back(Edge<S>{id++, u, v, w});
  return BasicMultigraph(std::move(vertices), std::move(list));
}

template <class S>
std::size_t BasicMultigraph<S>::index_of(VertexId v) const {
  const auto it = index_.find(v);
  if (it == index_.end()) unknown_vertex(v);
  return it->second;
}

template <class S>
const Edge<S>& BasicMultigraph<S>::edge(int id) const {
  const auto it = edge_index_.find(id);
  if (it == edge_index_.end()) {
    throw Error(ErrorCode::invalid_index, "unknown edge " + std::to_string(id));
  }
  return edges_[it->second];
}

template <class S>
bool BasicMultigraph<S>::is_connected() const {
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<VertexId> stack{vertices_.front()};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (int id : incident(v)) {
      const VertexId w = edge(id).other(v);
      const std::size_t k = index_of(w);
      if (!seen[k]) {
        seen[k] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == vertices_.size();
}

// ---------------------------------------------------------------------------
// BasicDigraph

template <class S>
BasicDigraph<S>::BasicDigraph(std::vector<VertexId> vertices, std::vector<Arc<S>> arcs)
    : vertices_(std::move(vertices)), arcs_(std::move(arcs)) {
  index_ = index_vertices(vertices_);
  out_.resize(vertices_.size());
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    const Arc<S>& a = arcs_[k];
    if (!arc_index_.emplace(a.id, k).second) {
      throw Error(ErrorCode::invalid_parameter, "duplicate arc id " + std::to_string(a.id));
    }
    if (!has_vertex(a.tail)) unknown_vertex(a.tail);
    if (!has_vertex(a.head)) unknown_vertex(a.head);
    if (!is_finite(a.weight)) {
      throw Error(ErrorCode::invalid_parameter, "arc " + std::to_string(a.id) + " has a non-finite weight");
    }
    out_[index_.at(a.tail)].push_back(a.id);
  }
  for (auto& list : out_) std::sort(list.begin(), list.end());
}

template <class S>
std::size_t BasicDigraph<S>::index_of(VertexId v) const {
  const auto it = index_.find(v);
  if (it == index_.end()) unknown_vertex(v);
  return it->second;
}

template <class S>
const Arc<S>& BasicDigraph<S>::arc(int id) const {
  const auto it = arc_index_.find(id);
  if (it == arc_index_.end()) {
    throw Error(ErrorCode::invalid_index, "unknown arc " + std::to_string(id));
  }
  return arcs_[it->second];
}

// ---------------------------------------------------------------------------
// Operations

template <class S>
Matrix<S> build_adjacency(const BasicMultigraph<S>& g) {
  Matrix<S> a(g.order(), g.order());
  for (const Edge<S>& e : g.edges()) {
    const std::size_t u = g.index_of(e.u);
    const std::size_t v = g.index_of(e.v);
    a(u, v) += e.weight;
    if (u != v) a(v, u) += e.weight;
  }
  return a;
}

template <class S>
Matrix<S> build_adjacency(const BasicDigraph<S>& d) {
  Matrix<S> a(d.order(), d.order());
  for (const Arc<S>& arc : d.arcs()) a(d.index_of(arc.tail), d.index_of(arc.head)) += arc.weight;
  return a;
}

template <class S>
Matrix<double> arc_count_matrix(const BasicDigraph<S>& d) {
  Matrix<double> a(d.order(), d.order());
  for (const Arc<S>& arc : d.arcs()) a(d.index_of(arc.tail), d.index_of(arc.head)) += 1.0;
  return a;
}

template <class S>
BasicMultigraph<S> scale_graph(const BasicMultigraph<S>& g, const S& t) {
  if (!(t > S(0)) || !is_finite(t)) {
    throw Error(ErrorCode::invalid_parameter, "scale factor must be positive");
  }
  std::vector<Edge<S>> edges = g.edges();
  for (Edge<S>& e : edges) e.weight *= t;
  return BasicMultigraph<S>(g.vertices(), std::move(edges));
}

template <class S>
BasicMultigraph<S> delete_vertices(const BasicMultigraph<S>& g, const std::set<VertexId>& removed) {
  for (VertexId v : removed) (void)g.index_of(v);
  std::vector<VertexId> kept;
  for (VertexId v : g.vertices())
    if (!removed.count(v)) kept.push_back(v);
  if (kept.empty()) throw Error(ErrorCode::empty_graph, "deleting every vertex leaves an empty graph");
  std::vector<Edge<S>> edges;
  for (const Edge<S>& e : g.edges())
    if (!removed.count(e.u) && !removed.count(e.v)) edges.push_back(e);
  return BasicMultigraph<S>(std::move(kept), std::move(edges));
}

template <class S>
BasicDigraph<S> delete_vertices(const BasicDigraph<S>& d, const std::set<VertexId>& removed) {
  for (VertexId v : removed) (void)d.index_of(v);
  std::vector<VertexId> kept;
  for (VertexId v : d.vertices())
    if (!removed.count(v)) kept.push_back(v);
  if (kept.empty()) throw Error(ErrorCode::empty_graph, "deleting every vertex leaves an empty graph");
  std::vector<Arc<S>> arcs;
  for (const Arc<S>& a : d.arcs())
    if (!removed.count(a.tail) && !removed.count(a.head)) arcs.push_back(a);
  return BasicDigraph<S>(std::move(kept), std::move(arcs));
}

template <class S>
BasicDigraph<S> directed_version(const BasicMultigraph<S>& g) {
  std::vector<Arc<S>> arcs;
  arcs.reserve(2 * g.edges().size());
  for (const Edge<S>& e : g.edges()) {
    arcs.push_back(Arc<S>{2 * e.id, e.u, e.v, e.weight, e.id});
    if (!e.is_loop()) arcs.push_back(Arc<S>{2 * e.id + 1, e.v, e.u, e.weight, e.id});
  }
  return BasicDigraph<S>(g.vertices(), std::move(arcs));
}

template <class S>
BasicMultigraph<S> reorder_vertices(const BasicMultigraph<S>& g, const std::vector<VertexId>& order) {
  if (order.size() != g.order()) {
    throw Error(ErrorCode::invalid_parameter, "vertex order must list every vertex once");
  }
  for (VertexId v : order) (void)g.index_of(v);
  return BasicMultigraph<S>(order, g.edges());
}

WeightedMultigraph to_double(const ExactMultigraph& g) {
  std::vector<Edge<double>> edges;
  for (const auto& e : g.edges()) edges.push_back({e.id, e.u, e.v, to_double(e.weight)});
  return WeightedMultigraph(g.vertices(), std::move(edges));
}

WeightedDigraph to_double(const ExactDigraph& d) {
  std::vector<Arc<double>> arcs;
  for (const auto& a : d.arcs()) arcs.push_back({a.id, a.tail, a.head, to_double(a.weight), a.origin});
  return WeightedDigraph(d.vertices(), std::move(arcs));
}

ExactMultigraph to_rational(const WeightedMultigraph& g) {
  std::vector<Edge<Rational>> edges;
  for (const auto& e : g.edges()) edges.push_back({e.id, e.u, e.v, to_rational(e.weight)});
  return ExactMultigraph(g.vertices(), std::move(edges));
}

#define WALKDIST_INSTANTIATE_GRAPH(S)                                                             \
  template class BasicMultigraph<S>;                                                              \
  template class BasicDigraph<S>;                                                                 \
  template Matrix<S> build_adjacency(const BasicMultigraph<S>&);                                  \
  template Matrix<S> build_adjacency(const BasicDigraph<S>&);                                     \
  template Matrix<double> arc_count_matrix(const BasicDigraph<S>&);                               \
  template BasicMultigraph<S> scale_graph(const BasicMultigraph<S>&, const S&);                   \
  template BasicMultigraph<S> delete_vertices(const BasicMultigraph<S>&, const std::set<VertexId>&); \
  template BasicDigraph<S> delete_vertices(const BasicDigraph<S>&, const std::set<VertexId>&);    \
  template BasicDigraph<S> directed_version(const BasicMultigraph<S>&);                           \
  template BasicMultigraph<S> reorder_vertices(const BasicMultigraph<S>&, const std::vector<VertexId>&);

WALKDIST_INSTANTIATE_GRAPH(double)
WALKDIST_INSTANTIATE_GRAPH(Rational)

#undef WALKDIST_INSTANTIATE_GRAPH

}  // namespace walkdist
