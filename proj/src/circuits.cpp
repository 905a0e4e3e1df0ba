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

#include "walkdist/circuits.hpp"

#include "walkdist/error.hpp"
#include "walkdist/walk_metric.hpp"

#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <string>

namespace walkdist {

namespace {

WeightedMultigraph as_double(const WeightedMultigraph& g) { return g; }
WeightedMultigraph as_double(const ExactMultigraph& g) { return to_double(g); }
WeightedDigraph as_double(const WeightedDigraph& d) { return d; }
WeightedDigraph as_double(const ExactDigraph& d) { return to_double(d); }

void check_length(int max_length) {
  if (max_length < 1) throw Error(ErrorCode::invalid_parameter, "circuit length bound must be >= 1");
}

void check_guard(double estimate, const EnumerationLimits& limits, const char* what) {
  if (!(estimate <= static_cast<double>(limits.max_objects))) {
    throw Error(ErrorCode::too_large, std::string(what) + ": about " + format_real(estimate) +
                                          " objects exceed the enumeration guard of " +
                                          std::to_string(limits.max_objects));
  }
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

template <class S>
double spectral_radius_of(const BasicDigraph<S>& d) {
  return spectral_radius(build_adjacency(as_double(d)));
}

}  // namespace

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("WALKDIST_GUARD")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) limits.max_objects = v;
  }
  return limits;
}

double circuit_count(const Matrix<double>& counts, int max_length) {
  std::vector<double> traces(static_cast<std::size_t>(max_length) + 1, 0.0);
  Matrix<double> p = Matrix<double>::identity(counts.rows());
  for (int k = 1; k <= max_length; ++k) {
    p = p * counts;
    for (std::size_t r = 0; r < p.rows(); ++r) traces[static_cast<std::size_t>(k)] += p(r, r);
  }
  double total = 0.0;
  for (long k = 1; k <= max_length; ++k) {
    double necklaces = 0.0;
    for (long e = 1; e <= k; ++e)
      if (k % e == 0) necklaces += static_cast<double>(euler_phi(k / e)) * traces[static_cast<std::size_t>(e)];
    total += necklaces / static_cast<double>(k);
  }
  return total;
}

template <class S>
std::vector<ClosedWalk<S>> enumerate_closed_walks(const BasicDigraph<S>& d, int length,
                                                  const EnumerationLimits& limits) {
  check_length(length);
  check_guard(power_trace(arc_count_matrix(d), length), limits, "closed walk enumeration");
  std::vector<ClosedWalk<S>> walks;
  std::vector<int> seq;
  std::function<void(VertexId, VertexId, const S&)> extend = [&](VertexId start, VertexId v, const S& w) {
    if (static_cast<int>(seq.size()) == length) {
      if (v == start) walks.push_back({start, seq, w});
      return;
    }
    for (int id : d.out_arcs(v)) {
      const Arc<S>& a = d.arc(id);
      seq.push_back(id);
      extend(start, a.head, w * a.weight);
      seq.pop_back();
    }
  };
  for (VertexId v : d.vertices()) extend(v, v, S(1));
  return walks;
}

template <class S>
void for_each_circuit(const BasicDigraph<S>& d, int max_length,
                      const std::function<void(const CircuitRef<S>&)>& visit,
                      const EnumerationLimits& limits) {
  check_length(max_length);
  check_guard(circuit_count(arc_count_matrix(d), max_length), limits, "circuit enumeration");

  std::vector<int> ids;
  for (const Arc<S>& a : d.arcs()) ids.push_back(a.id);
  std::sort(ids.begin(), ids.end());

  const std::size_t n = d.order();
  const auto len = static_cast<std::size_t>(max_length);
  std::vector<int> seq(len);
  std::vector<VertexId> tails(len);
  std::vector<int> dist(n);
  constexpr int kFar = std::numeric_limits<int>::max() / 4;

  for (int first : ids) {
    const Arc<S>& a0 = d.arc(first);
    const VertexId start = a0.tail;

    // Steps needed to return to `start` using only arcs with id >= first.
    std::fill(dist.begin(), dist.end(), kFar);
    dist[d.index_of(start)] = 0;
    for (bool changed = true; changed;) {
      changed = false;
      for (const Arc<S>& a : d.arcs()) {
        if (a.id < first) continue;
        const int via = dist[d.index_of(a.head)] + 1;
        int& here = dist[d.index_of(a.tail)];
        if (via < here) {
          here = via;
          changed = true;
        }
      }
    }
    if (1 + dist[d.index_of(a0.head)] > max_length) continue;

    seq[0] = first;
    tails[0] = start;
    // Duval/FKM rule: seq stays a prenecklace; p is the length of its
    // longest Lyndon prefix, and a closed prefix of length m is a least
    // rotation exactly when p divides m.
    std::function<void(std::size_t, std::size_t, const S&)> extend = [&](std::size_t pos, std::size_t p,
                                                                         const S& w) {
      const VertexId v = d.arc(seq[pos - 1]).head;
      if (v == start && pos % p == 0) {
        visit(CircuitRef<S>{std::span<const int>(seq.data(), pos), std::span<const VertexId>(tails.data(), pos), w,
                            static_cast<int>(pos / p)});
      }
      if (pos == len) return;
      const int lower = seq[pos - p];
      for (int id : d.out_arcs(v)) {
        if (id < lower) continue;
        const Arc<S>& a = d.arc(id);
        if (pos + 1 + static_cast<std::size_t>(dist[d.index_of(a.head)]) > len) continue;
        seq[pos] = id;
        tails[pos] = v;
        extend(pos + 1, id == lower ? p : pos + 1, w * a.weight);
      }
    };
    extend(1, 1, a0.weight);
  }
}

template <class S>
std::vector<Circuit<S>> circuits_up_to(const BasicDigraph<S>& d, int max_length, const EnumerationLimits& limits) {
  std::vector<Circuit<S>> out;
  for_each_circuit<S>(
      d, max_length,
      [&](const CircuitRef<S>& c) {
        out.push_back({{c.arcs.begin(), c.arcs.end()}, {c.tails.begin(), c.tails.end()}, c.weight, c.multiplicity});
      },
      limits);
  std::sort(out.begin(), out.end(), [](const Circuit<S>& a, const Circuit<S>& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.arcs < b.arcs;
  });
  return out;
}

template <class S>
std::vector<Circuit<S>> group_closed_walks(const BasicDigraph<S>& d, const std::vector<ClosedWalk<S>>& walks) {
  std::map<std::vector<int>, Circuit<S>> classes;
  for (const ClosedWalk<S>& w : walks) {
    std::vector<int> key = canonical_rotation<int>(w.arcs);
    if (classes.count(key)) continue;
    std::vector<VertexId> tails;
    for (int id : key) tails.push_back(d.arc(id).tail);
    const auto period = smallest_period<int>(key);
    const int mu = static_cast<int>(key.size() / period);
    classes.emplace(key, Circuit<S>{key, std::move(tails), w.weight, mu});
  }
  std::vector<Circuit<S>> out;
  for (auto& [key, c] : classes) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), [](const Circuit<S>& a, const Circuit<S>& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.arcs < b.arcs;
  });
  return out;
}

template <class S>
CircuitSum<S> logdet_expansion(const BasicDigraph<S>& d, int max_length, const EnumerationLimits& limits) {
  CircuitSum<S> sum;
  sum.per_length.assign(static_cast<std::size_t>(max_length), S(0));
  sum.rho = spectral_radius_of(d);
  sum.convergent = sum.rho < 1.0;
  for_each_circuit<S>(
      d, max_length,
      [&](const CircuitRef<S>& c) { sum.per_length[c.length() - 1] += c.weight / S(c.multiplicity); }, limits);
  for (const S& s : sum.per_length) sum.cumulative += s;
  return sum;
}

template <class S>
S nonperiodic_product(const BasicDigraph<S>& d, int max_length, const EnumerationLimits& limits) {
  S product(1);
  for_each_circuit<S>(
      d, max_length,
      [&](const CircuitRef<S>& c) {
        if (c.multiplicity == 1) product *= S(1) - c.weight;
      },
      limits);
  return product;
}

template <class S>
CofactorExpansion<S> cofactor_expansion_ii(const BasicMultigraph<S>& g, const S& t, VertexId i,
                                           std::optional<VertexId> j, int max_length,
                                           const EnumerationLimits& limits) {
  require_walk_parameter(as_double(g), to_double(t));
  if (j && *j == i) throw Error(ErrorCode::invalid_parameter, "j must differ from i");
  const BasicMultigraph<S> tg = scale_graph(g, t);

  const auto zero_sum = [&] {
    CircuitSum<S> s;
    s.per_length.assign(static_cast<std::size_t>(max_length), S(0));
    return s;
  };
  const auto expand_without = [&](const std::set<VertexId>& removed) {
    if (removed.size() >= tg.order()) return zero_sum();
    return logdet_expansion(directed_version(delete_vertices(tg, removed)), max_length, limits);
  };

  CofactorExpansion<S> result;
  result.total = expand_without({i});
  if (!j) return result;
  (void)g.index_of(*j);

  result.without_j = expand_without({i, *j});
  CircuitSum<S> through = zero_sum();
  through.rho = spectral_radius(build_adjacency(as_double(tg)));
  through.convergent = through.rho < 1.0;
  for_each_circuit<S>(
      directed_version(tg), max_length,
      [&](const CircuitRef<S>& c) {
        if (c.visits(*j) && !c.visits(i)) through.per_length[c.length() - 1] += c.weight / S(c.multiplicity);
      },
      limits);
  for (const S& s : through.per_length) through.cumulative += s;
  result.through_j = through;

  for (std::size_t k = 0; k < result.total.per_length.size(); ++k) {
    const S split = result.without_j->per_length[k] + through.per_length[k];
    if (!nearly_equal(result.total.per_length[k], split, 1e-10)) {
      throw Error(ErrorCode::internal_consistency,
                  "circuit split disagrees at length " + std::to_string(k + 1));
    }
  }
  return result;
}

#define WALKDIST_INSTANTIATE_CIRCUITS(S)                                                                   \
  template std::vector<ClosedWalk<S>> enumerate_closed_walks(const BasicDigraph<S>&, int,                  \
                                                             const EnumerationLimits&);                    \
  template void for_each_circuit(const BasicDigraph<S>&, int,                                              \
                                 const std::function<void(const CircuitRef<S>&)>&, const EnumerationLimits&); \
  template std::vector<Circuit<S>> circuits_up_to(const BasicDigraph<S>&, int, const EnumerationLimits&);  \
  template std::vector<Circuit<S>> group_closed_walks(const BasicDigraph<S>&,                              \
                                                      const std::vector<ClosedWalk<S>>&);                  \
  template CircuitSum<S> logdet_expansion(const BasicDigraph<S>&, int, const EnumerationLimits&);          \
  template S nonperiodic_product(const BasicDigraph<S>&, int, const EnumerationLimits&);                   \
  template CofactorExpansion<S> cofactor_expansion_ii(const BasicMultigraph<S>&, const S&, VertexId,       \
                                                      std::optional<VertexId>, int, const EnumerationLimits&);

WALKDIST_INSTANTIATE_CIRCUITS(double)
WALKDIST_INSTANTIATE_CIRCUITS(Rational)

#undef WALKDIST_INSTANTIATE_CIRCUITS

}  // namespace walkdist
