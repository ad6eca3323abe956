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

#include "isfkit/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "isfkit/errors.hpp"
#include "isfkit/random.hpp"

namespace isfkit {

std::string to_string(const MultiEdge& e) {
  if (e.is_zero_edge()) return "0" + std::to_string(e.j);
  return std::to_string(e.i) + std::to_string(e.j) + "^" + to_string(e.label);
}

LabeledMultigraph::LabeledMultigraph(int n, std::vector<int> zero_edges, std::vector<MultiEdge> labeled_edges)
    : n_(n) {
  if (n < 1) throw InputError("a labeled multigraph needs n >= 1");
  std::sort(zero_edges.begin(), zero_edges.end());
  if (std::adjacent_find(zero_edges.begin(), zero_edges.end()) != zero_edges.end())
    throw InputError("repeated edge 0k");
  for (int k : zero_edges)
    if (k < 1 || k > n) throw InputError("edge 0" + std::to_string(k) + " outside {1.." + std::to_string(n) + "}");
  for (auto& e : labeled_edges) {
    if (e.i == e.j) throw InputError("loop at vertex " + std::to_string(e.i));
    if (e.i < 1 || e.j < 1 || e.i > n || e.j > n) throw InputError("labeled edge outside {1.." + std::to_string(n) + "}");
    if (e.label.is_zero()) throw InputError("zero edge label");
    if (e.i > e.j) {
      std::swap(e.i, e.j);
      e.label = GaussRational(1) / e.label;
    }
  }
  for (std::size_t a = 0; a < labeled_edges.size(); ++a)
    for (std::size_t b = a + 1; b < labeled_edges.size(); ++b)
      if (labeled_edges[a].i == labeled_edges[b].i && labeled_edges[a].j == labeled_edges[b].j &&
          labeled_edges[a].label == labeled_edges[b].label)
        throw InputError("repeated labeled edge " + to_string(labeled_edges[a]));
  for (int k = 1; k <= n; ++k) {
    for (const auto& e : labeled_edges)
      if (e.j == k) edges_.push_back(e);
    if (std::binary_search(zero_edges.begin(), zero_edges.end(), k)) edges_.push_back({0, k, GaussRational()});
  }
}

bool LabeledMultigraph::has_zero_edge(int k) const {
  return std::any_of(edges_.begin(), edges_.end(), [k](const MultiEdge& e) { return e.is_zero_edge() && e.j == k; });
}

bool LabeledMultigraph::has_labeled_edge(int i, int j, const GaussRational& label) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [&](const MultiEdge& e) { return e.i == i && e.j == j && e.label == label; });
}

std::vector<int> LabeledMultigraph::zero_edges() const {
  std::vector<int> out;
  for (const auto& e : edges_)
    if (e.is_zero_edge()) out.push_back(e.j);
  return out;
}

std::vector<MultiEdge> LabeledMultigraph::labeled_edges() const {
  std::vector<MultiEdge> out;
  for (const auto& e : edges_)
    if (!e.is_zero_edge()) out.push_back(e);
  return out;
}

bool LabeledMultigraph::is_signed() const {
  const GaussRational one(1), minus_one(-1);
  return std::all_of(edges_.begin(), edges_.end(),
                     [&](const MultiEdge& e) { return e.is_zero_edge() || e.label == one || e.label == minus_one; });
}

bool LabeledMultigraph::is_real() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const MultiEdge& e) { return e.label.is_real(); });
}

LabeledMultigraph LabeledMultigraph::from_graph(const Graph& g) {
  std::vector<MultiEdge> edges;
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, GaussRational(1)});
  return LabeledMultigraph(std::max(g.n(), 1), {}, std::move(edges));
}

bool Arrangement::is_real() const {
  return std::all_of(normals.begin(), normals.end(), [](const RowVector<GaussRational>& v) {
    return std::all_of(v.begin(), v.end(), [](const GaussRational& z) { return z.is_real(); });
  });
}

Arrangement build_arrangement(const LabeledMultigraph& g) {
  Arrangement a;
  a.dim = g.n();
  for (const auto& e : g.edges()) {
    RowVector<GaussRational> v = RowVector<GaussRational>::Constant(g.n(), GaussRational(0));
    if (e.is_zero_edge()) {
      v(e.j - 1) = GaussRational(1);
    } else {
      v(e.i - 1) = GaussRational(1);
      v(e.j - 1) = -e.label;
    }
    a.normals.push_back(std::move(v));
  }
  return a;
}

IntPolynomial multigraph_isf_polynomial(const LabeledMultigraph& g) {
  std::vector<long> sizes(static_cast<std::size_t>(g.n()), 0);
  for (const auto& e : g.edges()) ++sizes[static_cast<std::size_t>(e.j - 1)];
  return poly_from_linear_factors(sizes);
}

bool is_multigraph_isf(const LabeledMultigraph& g, EdgeMask subset) {
  std::vector<bool> has_lower(static_cast<std::size_t>(g.n() + 1), false);
  for (EdgeMask m = subset; m != 0; m &= m - 1) {
    const int top = g.edges()[static_cast<std::size_t>(std::countr_zero(m))].j;
    if (has_lower[static_cast<std::size_t>(top)]) return false;
    has_lower[static_cast<std::size_t>(top)] = true;
  }
  return true;
}

bool is_multigraph_isf_by_paths(const LabeledMultigraph& g, EdgeMask subset) {
  const auto size = static_cast<std::size_t>(g.n() + 1);
  std::vector<int> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  std::vector<std::vector<int>> adj(size);
  for (EdgeMask m = subset; m != 0; m &= m - 1) {
    const auto& e = g.edges()[static_cast<std::size_t>(std::countr_zero(m))];
    const int a = find(e.i), b = find(e.j);
    if (a == b) return false;  // parallel edges land here too
    parent[static_cast<std::size_t>(a)] = b;
    adj[static_cast<std::size_t>(e.i)].push_back(e.j);
    adj[static_cast<std::size_t>(e.j)].push_back(e.i);
  }
  std::vector<bool> seen(size, false);
  for (int root = 0; root <= g.n(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = true;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        if (w < v) return false;
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return true;
}

SubsetCounts enumerate_multigraph_isf(const LabeledMultigraph& g, const Budget& budget, bool list) {
  if (g.num_edges() > std::min(budget.subset_edges, kMaxMaskEdges))
    throw BudgetExceeded("multigraph has too many edges for subset enumeration");
  SubsetCounts out;
  out.counts.assign(static_cast<std::size_t>(g.n() + 1), BigInt(0));
  const EdgeMask full = g.num_edges() == 0 ? 0 : (EdgeMask{1} << g.num_edges()) - 1;
  for (EdgeMask s = 0;; ++s) {
    if (is_multigraph_isf(g, s)) {
      out.counts[static_cast<std::size_t>(std::popcount(s))] += 1;
      if (list) out.members.push_back(s);
    }
    if (s == full) break;
  }
  while (out.counts.size() > 1 && out.counts.back() == 0) out.counts.pop_back();
  return out;
}

PerfectLabeling perfect_labeling(const LabeledMultigraph& g) {
  PerfectLabeling out;
  auto fail = [&out](int condition, std::vector<int> vertices, std::vector<MultiEdge> edges, std::string detail) {
    out.perfect = false;
    out.condition = condition;
    out.vertices = std::move(vertices);
    out.edges = std::move(edges);
    out.detail = std::move(detail);
  };
  for (int k = 1; k <= g.n(); ++k) {
    std::vector<MultiEdge> into;
    for (const auto& e : g.edges())
      if (e.j == k && !e.is_zero_edge()) into.push_back(e);
    for (const auto& a : into) {
      for (const auto& b : into) {
        if (a.i >= b.i) continue;
        const GaussRational ratio = a.label / b.label;
        if (!g.has_labeled_edge(a.i, b.i, ratio)) {
          fail(1, {a.i, b.i, k}, {a, b},
               "missing edge " + to_string(MultiEdge{a.i, b.i, ratio}));
          return out;
        }
      }
    }
    for (const auto& a : into) {
      for (const auto& b : into) {
        if (a.i == b.i && a.label < b.label && !g.has_zero_edge(a.i)) {
          fail(2, {a.i, k}, {a, b}, "missing edge 0" + std::to_string(a.i));
          return out;
        }
      }
    }
    if (g.has_zero_edge(k)) {
      for (const auto& a : into) {
        if (!g.has_zero_edge(a.i)) {
          fail(3, {a.i, k}, {a, MultiEdge{0, k, GaussRational()}}, "missing edge 0" + std::to_string(a.i));
          return out;
        }
      }
    }
  }
  return out;
}

IntPolynomial signed_characteristic(const IntersectionLattice& l, int n) {
  return signed_reflect(characteristic_polynomial(l), l.rank()).shifted(n - l.rank());
}

namespace {

using QRow = RowVector<Rational>;

std::string proportional_key(const QRow& v) {
  Eigen::Index lead = 0;
  while (lead < v.cols() && v(lead) == 0) ++lead;
  std::string key;
  for (Eigen::Index c = 0; c < v.cols(); ++c) key += to_string(Rational(v(c) / v(lead))) + ",";
  return key;
}

BigInt regions(const std::vector<QRow>& normals, Eigen::Index dim) {
  if (normals.empty()) return BigInt(1);
  const QRow& h = normals.back();
  std::vector<QRow> rest(normals.begin(), normals.end() - 1);
  const BigInt deleted = regions(rest, dim);
  const DenseMatrix<Rational> basis = kernel_basis(DenseMatrix<Rational>(h));
  std::vector<QRow> restricted;
  std::set<std::string> seen;
  for (const auto& g : rest) {
    QRow r = g * basis;
    if (std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; })) continue;
    if (seen.insert(proportional_key(r)).second) restricted.push_back(std::move(r));
  }
  return deleted + regions(restricted, dim - 1);
}

}  // namespace

BigInt count_regions_by_deletion_restriction(const Arrangement& a) {
  if (!a.is_real()) throw InputError("region counts need real labels");
  std::vector<QRow> normals;
  for (const auto& v : a.normals) {
    QRow q(v.cols());
    for (Eigen::Index c = 0; c < v.cols(); ++c) q(c) = v(c).re();
    normals.push_back(std::move(q));
  }
  return regions(normals, a.dim);
}

BigInt signed_chromatic_count(const LabeledMultigraph& g, int s) {
  if (!g.is_signed()) throw InputError("signed colorings need labels +1 and -1");
  if (s < 0) throw InputError("negative color bound");
  const int n = g.n();
  std::vector<int> color(static_cast<std::size_t>(n + 1), 0);
  BigInt total(0);
  auto proper_at = [&](int v) {
    for (const auto& e : g.edges()) {
      if (e.j != v) continue;
      if (e.is_zero_edge()) {
        if (color[static_cast<std::size_t>(v)] == 0) return false;
      } else {
        const int sign = e.label == GaussRational(1) ? 1 : -1;
        if (color[static_cast<std::size_t>(e.i)] == sign * color[static_cast<std::size_t>(v)]) return false;
      }
    }
    return true;
  };
  auto place = [&](auto&& self, int v) -> void {
    if (v > n) {
      total += 1;
      return;
    }
    for (int c = -s; c <= s; ++c) {
      color[static_cast<std::size_t>(v)] = c;
      if (proper_at(v)) self(self, v + 1);
    }
  };
  place(place, 1);
  return total;
}

namespace {

nlohmann::json counts_json(const std::vector<BigInt>& c) {
  auto j = nlohmann::json::array();
  for (const auto& x : c) j.push_back(x.str());
  return j;
}

std::vector<BigInt> padded(std::vector<BigInt> c, std::size_t size) {
  c.resize(std::max(c.size(), size), BigInt(0));
  return c;
}

nlohmann::json perfect_json(const PerfectLabeling& p) {
  nlohmann::json j{{"perfect", p.perfect}};
  if (!p.perfect) {
    auto edges = nlohmann::json::array();
    for (const auto& e : p.edges) edges.push_back(to_string(e));
    j["condition"] = p.condition;
    j["vertices"] = p.vertices;
    j["edges"] = edges;
    j["detail"] = p.detail;
  }
  return j;
}

}  // namespace

Report verify_isf_chi(const LabeledMultigraph& g, const MultigraphVerifyOptions& options) {
  Report r;
  const int n = g.n();
  const auto width = static_cast<std::size_t>(n + 1);
  const IntPolynomial isf = multigraph_isf_polynomial(g);
  const auto found = enumerate_multigraph_isf(g, options.budget, true);
  r.check("isf_enumeration_matches_factorization",
          r.identity("isf_enumeration_vs_factorization", poly_from_counts(found.counts, width - 1), isf));
  std::size_t mismatch = 0;
  const EdgeMask full = g.num_edges() == 0 ? 0 : (EdgeMask{1} << g.num_edges()) - 1;
  for (EdgeMask s = 0;; ++s) {
    if (is_multigraph_isf(g, s) != is_multigraph_isf_by_paths(g, s)) ++mismatch;
    if (s == full) break;
  }
  r.check("increasing_forest_criteria_agree", mismatch == 0, std::to_string(mismatch) + " subsets disagree");

  const IntersectionLattice lattice(build_arrangement(g), options.lattice);
  const IntPolynomial chi = characteristic_polynomial(lattice);
  const int rho = lattice.rank();
  r.value("lattice_size", lattice.size());
  r.value("rank", rho);
  r.fact("rank_below_n", rho != n);

  long mobius_sum = 0;
  for (std::size_t x = 0; x < lattice.size(); ++x) mobius_sum += lattice.mobius(x);
  if (lattice.size() > 1) r.check("mobius_sum_vanishes", mobius_sum == 0, std::to_string(mobius_sum));

  const auto perfect = perfect_labeling(g);
  r.fact("perfectly_labeled", perfect.perfect);
  r.value("perfect_labeling", perfect_json(perfect));

  const bool isf_eq = r.identity("isf_vs_signed_characteristic", isf, signed_characteristic(lattice, n));
  r.fact("isf_equals_signed_characteristic", isf_eq);
  r.check("isf_characteristic_iff_perfect", isf_eq == perfect.perfect);

  const auto chain = prefix_multichain(g, lattice);
  const auto blocks = atom_partition(lattice, chain);
  std::vector<long> block_sizes;
  for (std::size_t i = 1; i < blocks.size(); ++i) block_sizes.push_back(std::popcount(blocks[i]));
  IntPolynomial chain_product = IntPolynomial::constant(BigInt(1));
  for (long a : block_sizes) chain_product *= IntPolynomial{BigInt(-a), BigInt(1)};
  const bool chain_eq = r.identity("chi_times_t_n_minus_rank_vs_chain_product", chi.shifted(n - rho), chain_product);
  r.check("chain_factorization_iff_perfect", chain_eq == perfect.perfect);
  bool blocks_match_edges = true;
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    AtomMask expected = 0;
    for (int h = 0; h < g.num_edges(); ++h)
      if (g.edges()[static_cast<std::size_t>(h)].j == static_cast<int>(i)) expected |= AtomMask{1} << h;
    if (blocks[i] != expected) blocks_match_edges = false;
  }
  r.check("chain_blocks_are_edge_blocks", blocks_match_edges);

  std::vector<AtomMask> nbc_members;
  const auto nbc = lattice_nbc(lattice, AtomOrder::identity(lattice.num_atoms()), options.budget, &nbc_members);
  std::vector<BigInt> rota(nbc);
  for (std::size_t m = 1; m < rota.size(); m += 2) rota[m] = -rota[m];
  r.check("rota_formula", r.identity("chi_mobius_vs_nbc", chi, poly_from_counts(rota, static_cast<std::size_t>(rho))));

  Rng rng(options.seed);
  bool order_independent = true;
  for (int i = 0; i < options.random_orders; ++i) {
    AtomOrder order = AtomOrder::identity(lattice.num_atoms());
    rng.shuffle(order.rank);
    if (lattice_nbc(lattice, order, options.budget) != nbc) order_independent = false;
  }
  r.check("nbc_counts_order_independent", order_independent);

  std::vector<AtomMask> transversals;
  const auto tcounts = atomic_transversals(lattice, blocks, &transversals);
  r.check("transversals_equal_isf_counts", padded(tcounts, width) == padded(found.counts, width));
  std::sort(nbc_members.begin(), nbc_members.end());
  const bool all_nbc = std::all_of(transversals.begin(), transversals.end(), [&](AtomMask t) {
    return std::binary_search(nbc_members.begin(), nbc_members.end(), t);
  });
  r.check("transversals_are_nbc", all_nbc);
  const auto isf_counts = padded(found.counts, width);
  const auto nbc_counts = padded(nbc, width);
  bool bounded = true;
  for (std::size_t m = 0; m < width; ++m)
    if (isf_counts[m] > nbc_counts[m]) bounded = false;
  r.check("isf_at_most_nbc", bounded);
  r.check("isf_equals_nbc_iff_perfect", (isf_counts == nbc_counts) == perfect.perfect);

  const auto chain_ss = modular_chain(lattice);
  r.fact("supersolvable", chain_ss.has_value());
  if (perfect.perfect) r.check("perfect_implies_supersolvable", chain_ss.has_value());

  r.value("isf_counts", counts_json(found.counts));
  r.value("nbc_counts", counts_json(nbc));
  r.value("chain_block_sizes", block_sizes);
  r.value("characteristic_polynomial", poly_to_json(chi));
  return r;
}

Report topology_report(const LabeledMultigraph& g, const MultigraphVerifyOptions& options) {
  Report r;
  const int n = g.n();
  const auto width = static_cast<std::size_t>(n + 1);
  const Arrangement a = build_arrangement(g);
  const IntersectionLattice lattice(a, options.lattice);
  const auto nbc = padded(lattice_nbc(lattice, AtomOrder::identity(lattice.num_atoms()), options.budget), width);
  const auto isf = padded(enumerate_multigraph_isf(g, options.budget).counts, width);
  const bool perfect = is_perfectly_labeled(g);
  // Betti numbers of the complement: beta_m = nbc_m.
  bool bounded = true;
  for (std::size_t m = 0; m < width; ++m)
    if (isf[m] > nbc[m]) bounded = false;
  r.value("betti", counts_json(nbc));
  r.check("isf_at_most_betti", bounded);
  r.check("isf_equals_betti_iff_perfect", (isf == nbc) == perfect);
  r.fact("perfectly_labeled", perfect);

  if (g.is_real()) {
    BigInt zaslavsky(0), isf_total(0);
    for (const auto& c : nbc) zaslavsky += c;
    for (const auto& c : isf) isf_total += c;
    r.value("regions", zaslavsky.str());
    if (g.num_edges() <= options.region_recursion_hyperplanes) {
      const BigInt recursive = count_regions_by_deletion_restriction(a);
      r.value("regions_by_deletion_restriction", recursive.str());
      r.check("region_counts_agree", recursive == zaslavsky, zaslavsky.str() + " vs " + recursive.str());
    }
    r.check("isf_at_most_regions", isf_total <= zaslavsky);
    r.check("isf_equals_regions_iff_perfect", (isf_total == zaslavsky) == perfect);
  }
  return r;
}

Report signed_report(const LabeledMultigraph& g, const MultigraphVerifyOptions& options) {
  if (!g.is_signed()) throw InputError("signed report needs labels +1 and -1");
  Report r;
  const int n = g.n();
  const IntersectionLattice lattice(build_arrangement(g), options.lattice);
  const IntPolynomial p = characteristic_polynomial(lattice).shifted(n - lattice.rank());
  auto counts = nlohmann::json::array();
  bool all_match = true;
  for (int s = 0; s <= options.max_signed_s; ++s) {
    const BigInt brute = signed_chromatic_count(g, s);
    const BigInt value = p(BigInt(2 * s + 1));
    counts.push_back({{"s", s}, {"colorings", brute.str()}, {"polynomial", value.str()}});
    if (brute != value) all_match = false;
  }
  r.value("signed_colorings", counts);
  r.check("signed_colorings_match_characteristic", all_match);
  const bool perfect = is_perfectly_labeled(g);
  const bool eq = r.identity("isf_vs_signed_chromatic", multigraph_isf_polynomial(g), signed_reflect(p, n));
  r.check("isf_signed_chromatic_iff_perfect", eq == perfect);
  r.value("chromatic_function", poly_to_json(p));
  return r;
}

}  // namespace isfkit
