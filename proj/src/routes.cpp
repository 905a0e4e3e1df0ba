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

#include "walkdist/routes.hpp"

#include "walkdist/error.hpp"
#include "walkdist/walk_metric.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

namespace walkdist {

namespace {

WeightedMultigraph as_double(const WeightedMultigraph& g) { return g; }
WeightedMultigraph as_double(const ExactMultigraph& g) { return to_double(g); }

template <class S>
bool matrices_agree(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    if (!nearly_equal(a.data()[k], b.data()[k], 1e-12)) return false;
  return true;
}

void check_positions(std::size_t n, std::size_t i, std::size_t j) {
  if (n < 3) throw Error(ErrorCode::unsupported, "swap transforms need n >= 3");
  if (i < 1 || i > n || j < 1 || j > n || i == j) {
    throw Error(ErrorCode::invalid_index, "swap transform needs distinct positions in 1..n");
  }
}

template <class S>
void check_pair(const BasicMultigraph<S>& g, VertexId i, VertexId j) {
  if (g.order() < 3) throw Error(ErrorCode::unsupported, "the route expansion needs at least 3 vertices");
  (void)g.index_of(i);
  (void)g.index_of(j);
  if (i == j) throw Error(ErrorCode::invalid_parameter, "the pair must consist of two distinct vertices");
}

VertexId family_start(RouteFamily f, VertexId i, VertexId j) {
  return f == RouteFamily::j_to_i || f == RouteFamily::j_to_i_to_j ? j : i;
}

VertexId family_end(RouteFamily f, VertexId i, VertexId j) {
  return f == RouteFamily::j_to_i || f == RouteFamily::i_to_j_to_i ? i : j;
}

FigureClass figure_of(RouteFamily f) {
  switch (f) {
    case RouteFamily::j_to_i: return FigureClass::j_to_i;
    case RouteFamily::i_to_j: return FigureClass::i_to_j;
    case RouteFamily::j_to_i_to_j: return FigureClass::j_to_i_to_j;
    case RouteFamily::i_to_j_to_i: return FigureClass::i_to_j_to_i;
  }
  return FigureClass::jump_only;
}

RoutePiece hitting_piece(std::vector<int> edges) {
  std::vector<int> reversed(edges.rbegin(), edges.rend());
  return RoutePiece{1, std::min(std::move(edges), std::move(reversed))};
}

}  // namespace

const char* to_string(RouteFamily f) noexcept {
  switch (f) {
    case RouteFamily::j_to_i: return "j->i";
    case RouteFamily::i_to_j: return "i->j";
    case RouteFamily::j_to_i_to_j: return "j->i->j";
    case RouteFamily::i_to_j_to_i: return "i->j->i";
  }
  return "?";
}

const char* to_string(FigureClass f) noexcept {
  switch (f) {
    case FigureClass::j_to_i: return "j->i";
    case FigureClass::i_to_j: return "i->j";
    case FigureClass::j_to_i_to_j: return "j->i->j";
    case FigureClass::i_to_j_to_i: return "i->j->i";
    case FigureClass::jump_only: return "jump-only";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Swap transform

std::size_t merged_position(std::size_t i, std::size_t j) { return j < i ? j : j - 1; }

template <class S>
SwapTransform<S> swap_transform(std::size_t n, std::size_t i, std::size_t j) {
  check_positions(n, i, j);
  Matrix<S> full = Matrix<S>::identity(n);
  full(j - 1, i - 1) = S(-1);
  return SwapTransform<S>{n, i, j, full.without(i - 1, j - 1)};
}

template <class S>
SwapTransformReport check_swap_transform(const SwapTransform<S>& t) {
  SwapTransformReport report;
  const std::size_t m = t.n - 1;
  const Matrix<S> tt = t.matrix.transposed();
  report.orthogonal = matrices_agree(tt * t.matrix, Matrix<S>::identity(m));
  report.unit_determinant = nearly_equal(determinant(t.matrix), S(1), 1e-12);
  report.transpose_is_swap = matrices_agree(tt, swap_transform<S>(t.n, t.j, t.i).matrix);

  // Distinct entries so that any misplaced column shows up.
  Matrix<S> probe(t.n, t.n);
  for (std::size_t r = 0; r < t.n; ++r)
    for (std::size_t c = 0; c < t.n; ++c) probe(r, c) = S(static_cast<int>(r * t.n + c + 1));
  const Matrix<S> lhs = probe.without(t.i - 1, t.j - 1) * tt;
  Matrix<S> rhs(m, m);
  for (std::size_t r = 0, rr = 0; r < t.n; ++r) {
    if (r == t.i - 1) continue;
    for (std::size_t c = 0, cc = 0; c < t.n; ++c) {
      if (c == t.i - 1) continue;
      rhs(rr, cc++) = c == t.j - 1 ? S(-probe(r, t.i - 1)) : probe(r, c);
    }
    ++rr;
  }
  report.column_rule = matrices_agree(lhs, rhs);
  return report;
}

template <class S>
GInverseReport g_inverse_check(const SwapTransform<S>& t) {
  const Matrix<S> reduced = Matrix<S>::identity(t.n).without(t.i - 1, t.j - 1);
  const Matrix<S> t_inv = t.matrix.transposed();
  GInverseReport report;
  report.k = merged_position(t.i, t.j);
  Matrix<S> expected = Matrix<S>::identity(t.n - 1);
  expected(report.k - 1, report.k - 1) = S(0);
  report.holds = matrices_agree(reduced * t_inv * reduced, reduced) && matrices_agree(reduced * t_inv, expected);
  return report;
}

// ---------------------------------------------------------------------------
// Jump digraph

template <class S>
JumpDigraph<S> jump_digraph(const BasicMultigraph<S>& g, const S& t, VertexId i, VertexId j) {
  check_pair(g, i, j);
  require_walk_parameter(as_double(g), to_double(t));

  JumpDigraph<S> jd;
  jd.i = i;
  jd.j = j;
  jd.merged = j;
  jd.order = g.vertices();
  if ((g.index_of(i) + g.index_of(j)) % 2 == 1) {
    std::vector<VertexId> others;
    for (VertexId v : g.vertices())
      if (v != i && v != j) others.push_back(v);
    jd.order = {i, others.front(), j};
    jd.order.insert(jd.order.end(), others.begin() + 1, others.end());
    jd.relabeled = true;
  }
  const BasicMultigraph<S> h = reorder_vertices(g, jd.order);
  const std::size_t n = h.order();
  const std::size_t pi = h.index_of(i) + 1;
  const std::size_t pj = h.index_of(j) + 1;
  jd.merged_position = merged_position(pi, pj);

  const Matrix<S> ta = t * build_adjacency(h);
  const Matrix<S> b = Matrix<S>::identity(n) - ta;
  jd.algebraic = Matrix<S>::identity(n - 1) - b.without(pi - 1, pj - 1) * swap_transform<S>(n, pj, pi).matrix;

  Matrix<S> m = ta;
  m(pj - 1, pi - 1) -= S(1);
  jd.procedural = Matrix<S>(n - 1, n - 1);
  for (std::size_t r = 0, rr = 0; r < n; ++r) {
    if (r == pi - 1) continue;
    for (std::size_t c = 0, cc = 0; c < n; ++c) {
      if (c == pi - 1) continue;
      jd.procedural(rr, cc++) = c == pj - 1 ? S(-m(r, pi - 1)) : m(r, c);
    }
    ++rr;
  }

  std::vector<VertexId> vertices;
  for (VertexId v : jd.order)
    if (v != i) vertices.push_back(v);
  std::vector<Arc<S>> arcs;
  int next = 0;
  const auto add = [&](VertexId tail, VertexId head, S w, int origin, ArcRole role) {
    jd.roles.emplace(next, role);
    arcs.push_back(Arc<S>{next++, tail, head, std::move(w), origin});
  };
  jd.jump_arc = next;
  add(j, j, S(1), -1, ArcRole::jump);
  for (const Edge<S>& e : h.edges()) {
    const S w = t * e.weight;
    const bool u_end = e.u == i || e.u == j;
    const bool v_end = e.v == i || e.v == j;
    if (e.is_loop() && u_end) continue;  // loops at i or j do not survive
    if (!u_end && !v_end) {
      add(e.u, e.v, w, e.id, ArcRole::internal);
      if (!e.is_loop()) add(e.v, e.u, w, e.id, ArcRole::internal);
    } else if (u_end && v_end) {
      add(j, j, S(-w), e.id, ArcRole::cross);
    } else {
      const VertexId end = u_end ? e.u : e.v;
      const VertexId other = u_end ? e.v : e.u;
      if (end == j) {
        add(j, other, w, e.id, ArcRole::outgoing);
      } else {
        add(other, j, S(-w), e.id, ArcRole::incoming);
      }
    }
  }
  jd.digraph = BasicDigraph<S>(std::move(vertices), std::move(arcs));
  jd.constructed = build_adjacency(jd.digraph);

  if (!matrices_agree(jd.algebraic, jd.procedural) || !matrices_agree(jd.algebraic, jd.constructed)) {
    throw Error(ErrorCode::internal_consistency, "jump digraph constructions disagree");
  }
  return jd;
}

template <class S>
double jump_spectral_radius(const JumpDigraph<S>& jd) {
  if constexpr (is_exact_v<S>) {
    return spectral_radius(to_double(jd.algebraic));
  } else {
    return spectral_radius(jd.algebraic);
  }
}

// ---------------------------------------------------------------------------
// Alternating walks

template <class S>
bool is_alternating(const BasicMultigraph<S>& g, const JumpWalk<S>& w, VertexId i, VertexId j) {
  if (w.vertices.size() != w.edges.size() + 1) return false;
  for (std::size_t s = 0; s < w.edges.size(); ++s) {
    const VertexId a = w.vertices[s];
    const VertexId b = w.vertices[s + 1];
    if (w.edges[s] == kJumpEdge) {
      if (a != b || (a != i && a != j)) return false;
    } else {
      if (!g.has_vertex(a) || !g.has_vertex(b)) return false;
      const Edge<S>& e = g.edge(w.edges[s]);
      if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return false;
    }
  }
  const auto stretches_ok = [&](VertexId x, VertexId y) {
    for (std::size_t p = 0; p < w.vertices.size(); ++p) {
      if (w.vertices[p] != x) continue;
      for (std::size_t q = p + 1; q < w.vertices.size(); ++q) {
        if (w.vertices[q] != x) continue;
        const bool visits_y =
            std::find(w.vertices.begin() + static_cast<long>(p), w.vertices.begin() + static_cast<long>(q) + 1, y) !=
            w.vertices.begin() + static_cast<long>(q) + 1;
        const bool only_jumps = std::all_of(w.edges.begin() + static_cast<long>(p),
                                            w.edges.begin() + static_cast<long>(q),
                                            [](int e) { return e == kJumpEdge; });
        if (!visits_y && !only_jumps) return false;
      }
    }
    return true;
  };
  return stretches_ok(j, i) && stretches_ok(i, j);
}

template <class S>
std::vector<RoutePiece> route_partition(const JumpWalk<S>& w, VertexId i, VertexId j) {
  std::vector<RoutePiece> pieces;
  std::vector<int> current;
  for (std::size_t s = 0; s < w.edges.size(); ++s) {
    if (w.edges[s] == kJumpEdge) {
      if (!current.empty()) throw Error(ErrorCode::invalid_parameter, "jump inside a hitting walk");
      pieces.push_back(RoutePiece{0, {}});
      continue;
    }
    current.push_back(w.edges[s]);
    const VertexId v = w.vertices[s + 1];
    if (v == i || v == j) {
      if (v == w.vertices[s + 1 - current.size()]) {
        throw Error(ErrorCode::invalid_parameter, "walk is not alternating");
      }
      pieces.push_back(hitting_piece(std::move(current)));
      current.clear();
    }
  }
  if (!current.empty()) throw Error(ErrorCode::invalid_parameter, "walk does not end at i or j");
  return pieces;
}

template <class S>
std::vector<JumpWalk<S>> enumerate_alternating_walks(const BasicMultigraph<S>& g, const S& t, VertexId i,
                                                     VertexId j, int length, RouteFamily family,
                                                     const EnumerationLimits& limits) {
  check_pair(g, i, j);
  if (!(t > S(0))) throw Error(ErrorCode::invalid_parameter, "t must be positive");
  if (length < 1) return {};
  if (length > limits.max_route_length) {
    throw Error(ErrorCode::too_large, "alternating walks longer than " + std::to_string(limits.max_route_length) +
                                          " are not enumerated");
  }
  const VertexId start = family_start(family, i, j);
  const VertexId finish = family_end(family, i, j);

  {
    Matrix<double> counts = arc_count_matrix(directed_version(g));
    counts(g.index_of(i), g.index_of(i)) += 1.0;
    counts(g.index_of(j), g.index_of(j)) += 1.0;
    const Matrix<double> p = power(counts, length);
    double walks = 0.0;
    for (std::size_t c = 0; c < p.cols(); ++c) walks += p(g.index_of(start), c);
    if (walks > static_cast<double>(limits.max_objects)) {
      throw Error(ErrorCode::too_large, "about " + format_real(walks) + " walks exceed the enumeration guard");
    }
  }

  std::vector<JumpWalk<S>> walks;
  JumpWalk<S> w{{start}, {}, S(1)};
  // `anchor` is the endpoint (i or j) where the current hitting walk began;
  // `inside` is true strictly between its ends.
  std::function<void(VertexId, bool, const S&)> extend = [&](VertexId anchor, bool inside, const S& weight) {
    const VertexId v = w.vertices.back();
    if (static_cast<int>(w.edges.size()) == length) {
      if (!inside && v == finish) walks.push_back({w.vertices, w.edges, weight});
      return;
    }
    const auto step = [&](int edge, VertexId to, VertexId next_anchor, bool next_inside, const S& next_weight) {
      w.edges.push_back(edge);
      w.vertices.push_back(to);
      extend(next_anchor, next_inside, next_weight);
      w.edges.pop_back();
      w.vertices.pop_back();
    };
    if (!inside) step(kJumpEdge, v, anchor, false, weight);
    for (int id : g.incident(v)) {
      const Edge<S>& e = g.edge(id);
      const VertexId to = e.other(v);
      if (to == anchor) continue;  // would close an anchor..anchor stretch avoiding the other end
      const S next_weight = weight * (t * e.weight);
      if (to == i || to == j) {
        step(id, to, to, false, next_weight);
      } else {
        step(id, to, anchor, true, next_weight);
      }
    }
  };
  extend(start, false, S(1));
  return walks;
}

template <class S>
std::vector<AlternatingRoute<S>> routes_up_to(const BasicMultigraph<S>& g, const S& t, VertexId i, VertexId j,
                                              int max_length, RouteFamily family, const EnumerationLimits& limits) {
  std::vector<AlternatingRoute<S>> routes;
  for (int len = 1; len <= max_length; ++len) {
    std::map<std::vector<RoutePiece>, AlternatingRoute<S>> classes;
    for (JumpWalk<S>& w : enumerate_alternating_walks(g, t, i, j, len, family, limits)) {
      std::vector<RoutePiece> pieces = route_partition(w, i, j);
      std::vector<RoutePiece> canon = canonical_rotation<RoutePiece>(pieces);
      auto it = classes.find(canon);
      if (it == classes.end()) {
        const bool jumps_only =
            std::all_of(canon.begin(), canon.end(), [](const RoutePiece& p) { return p.kind == 0; });
        const std::size_t period = smallest_period<RoutePiece>(canon);
        AlternatingRoute<S> r{family,
                              jumps_only ? FigureClass::jump_only : figure_of(family),
                              canon,
                              len,
                              w.weight,
                              static_cast<int>(canon.size() / period),
                              0,
                              {}};
        it = classes.emplace(std::move(canon), std::move(r)).first;
      }
      ++it->second.walk_count;
      if (pieces == it->first) it->second.representative = std::move(w);
    }
    for (auto& [key, r] : classes) {
      const std::size_t period = key.size() / static_cast<std::size_t>(r.multiplicity);
      if (r.walk_count != period || r.representative.edges.empty()) {
        throw Error(ErrorCode::internal_consistency, "route class size differs from its period");
      }
      routes.push_back(std::move(r));
    }
  }
  return routes;
}

// ---------------------------------------------------------------------------
// Bijection

namespace {

struct GammaFigure {
  std::vector<RoutePiece> partition;
  int negatives = 0;
};

template <class S>
std::optional<GammaFigure> gamma_figure(const JumpDigraph<S>& jd, const CircuitRef<S>& c) {
  const auto at = std::find(c.tails.begin(), c.tails.end(), jd.merged);
  if (at == c.tails.end()) return std::nullopt;
  const std::size_t offset = static_cast<std::size_t>(at - c.tails.begin());
  GammaFigure f;
  std::vector<int> current;
  for (std::size_t s = 0; s < c.length(); ++s) {
    const int id = c.arcs[(offset + s) % c.length()];
    const Arc<S>& a = jd.digraph.arc(id);
    if (jd.is_negative(id)) ++f.negatives;
    if (jd.roles.at(id) == ArcRole::jump) {
      f.partition.push_back(RoutePiece{0, {}});
      continue;
    }
    current.push_back(a.origin);
    if (a.head == jd.merged) {
      f.partition.push_back(hitting_piece(std::move(current)));
      current.clear();
    }
  }
  f.partition = canonical_rotation<RoutePiece>(f.partition);
  return f;
}

template <class S>
bool same_route_sets(const std::vector<AlternatingRoute<S>>& a, const std::vector<AlternatingRoute<S>>& b) {
  if (a.size() != b.size()) return false;
  std::map<std::vector<RoutePiece>, const AlternatingRoute<S>*> index;
  for (const auto& r : a) index.emplace(r.partition, &r);
  for (const auto& r : b) {
    const auto it = index.find(r.partition);
    if (it == index.end()) return false;
    if (it->second->multiplicity != r.multiplicity || it->second->length != r.length ||
        !nearly_equal(it->second->weight, r.weight, 1e-12))
      return false;
  }
  return true;
}

}  // namespace

template <class S>
BijectionReport bijection_check(const BasicMultigraph<S>& g, const S& t, VertexId i, VertexId j, int max_length,
                                const EnumerationLimits& limits) {
  const JumpDigraph<S> jd = jump_digraph(g, t, i, j);
  const auto ji = routes_up_to(g, t, i, j, max_length, RouteFamily::j_to_i, limits);
  const auto jij = routes_up_to(g, t, i, j, max_length, RouteFamily::j_to_i_to_j, limits);
  const auto ij = routes_up_to(g, t, i, j, max_length, RouteFamily::i_to_j, limits);
  const auto iji = routes_up_to(g, t, i, j, max_length, RouteFamily::i_to_j_to_i, limits);

  BijectionReport report;
  report.rows.resize(static_cast<std::size_t>(max_length));
  for (int k = 1; k <= max_length; ++k) report.rows[static_cast<std::size_t>(k - 1)].length = k;

  std::map<std::vector<RoutePiece>, const AlternatingRoute<S>*> odd_index;
  std::map<std::vector<RoutePiece>, const AlternatingRoute<S>*> even_index;
  std::vector<S> route_sums(static_cast<std::size_t>(max_length), S(0));
  std::vector<S> gamma_sums(static_cast<std::size_t>(max_length), S(0));
  for (const auto& r : ji) {
    odd_index.emplace(r.partition, &r);
    ++report.rows[static_cast<std::size_t>(r.length - 1)].routes_ji;
    route_sums[static_cast<std::size_t>(r.length - 1)] -= r.weight / S(r.multiplicity);
  }
  for (const auto& r : jij) {
    even_index.emplace(r.partition, &r);
    ++report.rows[static_cast<std::size_t>(r.length - 1)].routes_jij;
    route_sums[static_cast<std::size_t>(r.length - 1)] += r.weight / S(r.multiplicity);
  }

  std::set<const AlternatingRoute<S>*> matched;
  for_each_circuit<S>(
      jd.digraph, max_length,
      [&](const CircuitRef<S>& c) {
        const auto f = gamma_figure(jd, c);
        if (!f) return;
        const std::size_t row = c.length() - 1;
        gamma_sums[row] += c.weight / S(c.multiplicity);
        const bool odd = f->negatives % 2 == 1;
        (odd ? report.rows[row].gamma_odd : report.rows[row].gamma_even) += 1;
        const auto& index = odd ? odd_index : even_index;
        const auto it = index.find(f->partition);
        const std::string where = "length " + std::to_string(c.length()) + ": ";
        if (it == index.end()) {
          report.mismatches.push_back(where + "circuit through ij has no matching route");
          return;
        }
        const AlternatingRoute<S>& r = *it->second;
        if (!matched.insert(&r).second) report.mismatches.push_back(where + "route matched twice");
        const S signed_weight = odd ? S(-r.weight) : r.weight;
        if (r.length != static_cast<int>(c.length()) || r.multiplicity != c.multiplicity ||
            !nearly_equal(signed_weight, c.weight, 1e-12)) {
          report.mismatches.push_back(where + "length, weight or multiplicity differs");
        }
      },
      limits);
  const std::size_t total_routes = ji.size() + jij.size();
  if (matched.size() != total_routes) {
    report.mismatches.push_back(std::to_string(total_routes - matched.size()) + " routes have no circuit");
  }
  for (std::size_t k = 0; k < report.rows.size(); ++k) {
    report.rows[k].gamma_signed = to_double(gamma_sums[k]);
    report.rows[k].routes_signed = to_double(route_sums[k]);
    if (!nearly_equal(gamma_sums[k], route_sums[k], 1e-10)) {
      report.mismatches.push_back("length " + std::to_string(k + 1) + ": signed totals differ");
    }
  }
  report.mirror_ok = same_route_sets(jij, iji) && same_route_sets(ji, ij);
  report.odd_multiplicity_ok =
      std::all_of(ji.begin(), ji.end(), [](const auto& r) { return r.multiplicity % 2 == 1; }) &&
      std::all_of(ij.begin(), ij.end(), [](const auto& r) { return r.multiplicity % 2 == 1; });
  return report;
}

// ---------------------------------------------------------------------------
// Expansions

template <class S>
LogdetPairExpansion<S> logdet_ij_expansion(const BasicMultigraph<S>& g, const S& t, VertexId i, VertexId j,
                                           int max_length, const EnumerationLimits& limits) {
  const JumpDigraph<S> jd = jump_digraph(g, t, i, j);
  LogdetPairExpansion<S> out;
  out.jump_rho = jump_spectral_radius(jd);
  if (out.jump_rho >= 1.0) {
    throw Error(ErrorCode::divergence,
                "jump digraph spectral radius " + format_real(out.jump_rho) + " >= 1; the expansion diverges");
  }
  out.gamma_side = logdet_expansion(jd.digraph, max_length, limits);

  const BasicMultigraph<S> tg = scale_graph(g, t);
  out.figure_side = logdet_expansion(directed_version(delete_vertices(tg, {i, j})), max_length, limits);
  for (const auto& r : routes_up_to(g, t, i, j, max_length, RouteFamily::j_to_i_to_j, limits)) {
    out.figure_side.per_length[static_cast<std::size_t>(r.length - 1)] += r.weight / S(r.multiplicity);
  }
  for (const auto& r : routes_up_to(g, t, i, j, max_length, RouteFamily::j_to_i, limits)) {
    out.figure_side.per_length[static_cast<std::size_t>(r.length - 1)] -= r.weight / S(r.multiplicity);
  }
  out.figure_side.cumulative = S(0);
  for (const S& s : out.figure_side.per_length) out.figure_side.cumulative += s;
  out.figure_side.rho = out.gamma_side.rho;
  out.figure_side.convergent = out.gamma_side.convergent;

  for (std::size_t k = 0; k < out.gamma_side.per_length.size(); ++k) {
    if (!nearly_equal(out.gamma_side.per_length[k], out.figure_side.per_length[k], 1e-10)) {
      throw Error(ErrorCode::internal_consistency,
                  "jump digraph circuits and figures disagree at length " + std::to_string(k + 1));
    }
  }
  return out;
}

std::string FigureCollection::notation() const {
  std::string seq;
  const bool compact =
      std::all_of(vertices.begin(), vertices.end(), [](VertexId v) { return v >= 0 && v <= 9; });
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (k > 0 && !compact) seq += ',';
    seq += std::to_string(vertices[k]);
  }
  std::string prefix;
  if (multiplicity != 1) {
    prefix = std::to_string(count) + "/" + std::to_string(multiplicity);
  } else if (count != 1) {
    prefix = std::to_string(count);
  }
  return prefix + "(" + seq + ")";
}

namespace {

struct FigureEntry {
  int jump_only;  // 0 first
  int side;       // 0 for figures anchored at i
  int multiplicity;
  std::vector<VertexId> vertices;

  auto key() const { return std::tie(jump_only, side, multiplicity, vertices); }
};

std::vector<FigureCollection> collect(std::vector<FigureEntry> entries) {
  std::sort(entries.begin(), entries.end(), [](const FigureEntry& a, const FigureEntry& b) {
    return std::make_tuple(a.jump_only, a.side, -a.multiplicity, std::cref(a.vertices)) <
           std::make_tuple(b.jump_only, b.side, -b.multiplicity, std::cref(b.vertices));
  });
  std::vector<FigureCollection> out;
  for (const FigureEntry& e : entries) {
    if (!out.empty() && out.back().multiplicity == e.multiplicity && out.back().vertices == e.vertices) {
      ++out.back().count;
    } else {
      out.push_back({1, e.multiplicity, e.vertices});
    }
  }
  return out;
}

/// Vertex sequence of the rotation starting at `anchor` with the least arcs.
template <class S>
std::vector<VertexId> anchored_sequence(const CircuitRef<S>& c, VertexId anchor) {
  const std::size_t m = c.length();
  std::optional<std::size_t> best;
  const auto arcs_from = [&](std::size_t s) {
    std::vector<int> r;
    for (std::size_t k = 0; k < m; ++k) r.push_back(c.arcs[(s + k) % m]);
    return r;
  };
  for (std::size_t s = 0; s < m; ++s) {
    if (c.tails[s] != anchor) continue;
    if (!best || arcs_from(s) < arcs_from(*best)) best = s;
  }
  std::vector<VertexId> seq;
  for (std::size_t k = 0; k < m; ++k) seq.push_back(c.tails[(*best + k) % m]);
  seq.push_back(anchor);
  return seq;
}

}  // namespace

template <class S>
DistanceExpansion<S> distance_expansion(const BasicMultigraph<S>& g, const S& t, VertexId i, VertexId j,
                                        int max_length, const EnumerationLimits& limits) {
  const JumpDigraph<S> jd = jump_digraph(g, t, i, j);
  DistanceExpansion<S> out;
  out.i = i;
  out.j = j;
  out.jump_rho = jump_spectral_radius(jd);
  if (out.jump_rho >= 1.0) {
    throw Error(ErrorCode::divergence,
                "jump digraph spectral radius " + format_real(out.jump_rho) + " >= 1; the expansion diverges");
  }
  const auto rows = static_cast<std::size_t>(max_length);
  out.rows.resize(rows);
  std::vector<std::vector<FigureEntry>> circuit_entries(rows), round_entries(rows), cross_entries(rows);

  const BasicMultigraph<S> tg = scale_graph(g, t);
  for (const auto& [anchor, avoided, side] : {std::tuple{i, j, 0}, std::tuple{j, i, 1}}) {
    for_each_circuit<S>(
        directed_version(delete_vertices(tg, {avoided})), max_length,
        [&, anchor = anchor, side = side](const CircuitRef<S>& c) {
          if (!c.visits(anchor)) return;
          const std::size_t row = c.length() - 1;
          S& cell = side == 0 ? out.rows[row].circuits_i_only : out.rows[row].circuits_j_only;
          cell += c.weight / S(c.multiplicity);
          circuit_entries[row].push_back({1, side, c.multiplicity, anchored_sequence(c, anchor)});
        },
        limits);
  }

  for (RouteFamily family :
       {RouteFamily::i_to_j_to_i, RouteFamily::j_to_i_to_j, RouteFamily::i_to_j, RouteFamily::j_to_i}) {
    const bool round = family == RouteFamily::i_to_j_to_i || family == RouteFamily::j_to_i_to_j;
    const int side = family_start(family, i, j) == i ? 0 : 1;
    for (const auto& r : routes_up_to(g, t, i, j, max_length, family, limits)) {
      const std::size_t row = static_cast<std::size_t>(r.length - 1);
      (round ? out.rows[row].round_trip : out.rows[row].crossing) += r.weight / S(r.multiplicity);
      (round ? round_entries : cross_entries)[row].push_back(
          {r.figure == FigureClass::jump_only ? 0 : 1, side, r.multiplicity, r.representative.vertices});
    }
  }

  S running(0);
  for (std::size_t k = 0; k < rows; ++k) {
    ExpansionRow<S>& row = out.rows[k];
    row.length = static_cast<int>(k + 1);
    row.signed_sum = (row.round_trip - row.circuits_i_only - row.circuits_j_only - row.crossing) / S(2);
    running += row.signed_sum;
    row.cumulative = running;
    row.circuit_figures = collect(std::move(circuit_entries[k]));
    row.round_trip_figures = collect(std::move(round_entries[k]));
    row.crossing_figures = collect(std::move(cross_entries[k]));
  }
  out.cumulative = running;
  const WeightedMultigraph gd = as_double(g);
  out.exact = walk_distances(walk_weights(gd, to_double(t))).at(i, j);
  out.residual = out.exact - to_double(out.cumulative);
  return out;
}

#define WALKDIST_INSTANTIATE_ROUTES(S)                                                                          \
  template SwapTransform<S> swap_transform(std::size_t, std::size_t, std::size_t);                              \
  template SwapTransformReport check_swap_transform(const SwapTransform<S>&);                                   \
  template GInverseReport g_inverse_check(const SwapTransform<S>&);                                             \
  template JumpDigraph<S> jump_digraph(const BasicMultigraph<S>&, const S&, VertexId, VertexId);                \
  template double jump_spectral_radius(const JumpDigraph<S>&);                                                  \
  template bool is_alternating(const BasicMultigraph<S>&, const JumpWalk<S>&, VertexId, VertexId);             \
  template std::vector<RoutePiece> route_partition(const JumpWalk<S>&, VertexId, VertexId);                     \
  template std::vector<JumpWalk<S>> enumerate_alternating_walks(const BasicMultigraph<S>&, const S&, VertexId,  \
                                                                VertexId, int, RouteFamily,                     \
                                                                const EnumerationLimits&);                      \
  template std::vector<AlternatingRoute<S>> routes_up_to(const BasicMultigraph<S>&, const S&, VertexId,         \
                                                         VertexId, int, RouteFamily, const EnumerationLimits&); \
  template BijectionReport bijection_check(const BasicMultigraph<S>&, const S&, VertexId, VertexId, int,        \
                                           const EnumerationLimits&);                                           \
  template LogdetPairExpansion<S> logdet_ij_expansion(const BasicMultigraph<S>&, const S&, VertexId, VertexId, \
                                                      int, const EnumerationLimits&);                           \
  template DistanceExpansion<S> distance_expansion(const BasicMultigraph<S>&, const S&, VertexId, VertexId,    \
                                                   int, const EnumerationLimits&);

WALKDIST_INSTANTIATE_ROUTES(double)
WALKDIST_INSTANTIATE_ROUTES(Rational)

#undef WALKDIST_INSTANTIATE_ROUTES

}  // namespace walkdist
