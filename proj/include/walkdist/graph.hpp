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

#pragma once

// Weighted multigraphs and multidigraphs.
//
// Vertices carry stable integer labels that survive deletion; the position of
// a label in vertices() is its row/column in every matrix built from the
// graph. Parallel edges and loops are kept as individually identified items
// because walk and circuit enumeration must tell them apart.

#include "walkdist/matrix.hpp"
#include "walkdist/scalar.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace walkdist {

using VertexId = int;

template <class S>
struct Edge {
  int id;
  VertexId u;
  VertexId v;
  S weight;

  bool is_loop() const noexcept { return u == v; }
  VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
};

template <class S>
struct Arc {
  int id;
  VertexId tail;
  VertexId head;
  S weight;
  int origin = -1;  // id of the undirected edge this arc was derived from, if any
};

/// Undirected multigraph with strictly positive weights.
template <class S>
class BasicMultigraph {
 public:
  using scalar_type = S;

  BasicMultigraph(std::vector<VertexId> vertices, std::vector<Edge<S>> edges);

  /// Vertices 1..n; edges get ids 0, 1, ... in list order.
  static BasicMultigraph from_edge_list(int n, const std::vector<std::tuple<VertexId, VertexId, S>>& edges);

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge<S>>& edges() const noexcept { return edges_; }
  std::size_t order() const noexcept { return vertices_.size(); }

  bool has_vertex(VertexId v) const { return index_.count(v) != 0; }
  /// Row/column position of a vertex label; throws invalid_index.
  std::size_t index_of(VertexId v) const;

  /// Edges incident to v, loops included once.
  const std::vector<int>& incident(VertexId v) const { return incidence_[index_of(v)]; }
  const Edge<S>& edge(int id) const;

  bool is_connected() const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge<S>> edges_;
  std::map<VertexId, std::size_t> index_;
  std::map<int, std::size_t> edge_index_;
  std::vector<std::vector<int>> incidence_;
};

/// Multidigraph with arbitrary finite real arc weights.
template <class S>
class BasicDigraph {
 public:
  using scalar_type = S;

  BasicDigraph() = default;
  BasicDigraph(std::vector<VertexId> vertices, std::vector<Arc<S>> arcs);

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Arc<S>>& arcs() const noexcept { return arcs_; }
  std::size_t order() const noexcept { return vertices_.size(); }

  bool has_vertex(VertexId v) const { return index_.count(v) != 0; }
  std::size_t index_of(VertexId v) const;
  const Arc<S>& arc(int id) const;

  /// Arc ids leaving v, in increasing id order.
  const std::vector<int>& out_arcs(VertexId v) const { return out_[index_of(v)]; }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Arc<S>> arcs_;
  std::map<VertexId, std::size_t> index_;
  std::map<int, std::size_t> arc_index_;
  std::vector<std::vector<int>> out_;
};

using WeightedMultigraph = BasicMultigraph<double>;
using ExactMultigraph = BasicMultigraph<Rational>;
using WeightedDigraph = BasicDigraph<double>;
using ExactDigraph = BasicDigraph<Rational>;

/// a_ij = sum of the weights of edges joining i and j; a loop adds its weight
/// to a_ii once.
template <class S>
Matrix<S> build_adjacency(const BasicMultigraph<S>& g);

/// a_ij = sum of the weights of arcs i -> j.
template <class S>
Matrix<S> build_adjacency(const BasicDigraph<S>& d);

/// Number of arcs i -> j (a nonnegative integer matrix), used for size guards.
template <class S>
Matrix<double> arc_count_matrix(const BasicDigraph<S>& d);

/// Every edge weight multiplied by t > 0.
template <class S>
BasicMultigraph<S> scale_graph(const BasicMultigraph<S>& g, const S& t);

/// Induced subgraph on V \ removed; survivors keep their labels and order.
template <class S>
BasicMultigraph<S> delete_vertices(const BasicMultigraph<S>& g, const std::set<VertexId>& removed);

template <class S>
BasicDigraph<S> delete_vertices(const BasicDigraph<S>& d, const std::set<VertexId>& removed);

/// Each non-loop edge e becomes arcs 2e (u->v) and 2e+1 (v->u); a loop
/// becomes the single arc 2e, so the adjacency matrix is unchanged.
template <class S>
BasicDigraph<S> directed_version(const BasicMultigraph<S>& g);

/// Same graph with the vertex list permuted to `order`.
template <class S>
BasicMultigraph<S> reorder_vertices(const BasicMultigraph<S>& g, const std::vector<VertexId>& order);

WeightedMultigraph to_double(const ExactMultigraph& g);
WeightedDigraph to_double(const ExactDigraph& d);
ExactMultigraph to_rational(const WeightedMultigraph& g);

}  // namespace walkdist
