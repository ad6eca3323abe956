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

#include "isfkit/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "isfkit/errors.hpp"
#include "isfkit/linalg.hpp"

namespace isfkit {

namespace {

// Calls fn on every r-subset of {1..n} in lexicographic order.
void for_each_subset(int n, int r, const std::function<void(const Simplex&)>& fn) {
  Simplex s;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(s.size()) == r) {
      fn(s);
      return;
    }
    for (int v = next; v <= n - (r - static_cast<int>(s.size())) + 1; ++v) {
      s.push_back(v);
      self(self, v + 1);
      s.pop_back();
    }
  };
  rec(rec, 1);
}

Simplex without(const Simplex& s, std::size_t pos) {
  Simplex out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (i != pos) out.push_back(s[i]);
  return out;
}

Simplex with(Simplex s, std::initializer_list<int> extra) {
  s.insert(s.end(), extra);
  std::sort(s.begin(), s.end());
  return s;
}

Simplex prefix(const Simplex& s, int len) { return Simplex(s.begin(), s.begin() + len); }

}  // namespace

std::string to_string(const Simplex& s) {
  std::string out;
  const bool compact = std::all_of(s.begin(), s.end(), [](int v) { return v < 10; });
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0 && !compact) out += "-";
    out += std::to_string(s[i]);
  }
  return s.empty() ? "{}" : out;
}

PureComplex::PureComplex(int n, int d, std::vector<Simplex> facets) : n_(n), d_(d) {
  if (n < 0) throw InputError("negative vertex count");
  if (d < 1) throw InputError("dimension must be at least 1");
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    if (static_cast<int>(f.size()) != d + 1) throw InputError("facet " + to_string(f) + " does not have d+1 vertices");
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InputError("facet " + to_string(f) + " repeats a vertex");
    if (f.front() < 1 || f.back() > n) throw InputError("facet " + to_string(f) + " outside {1.." + std::to_string(n) + "}");
  }
  std::sort(facets.begin(), facets.end());
  if (std::adjacent_find(facets.begin(), facets.end()) != facets.end()) throw InputError("duplicate facet");
  facets_ = std::move(facets);
}

int PureComplex::facet_index(const Simplex& face) const {
  auto it = std::lower_bound(facets_.begin(), facets_.end(), face);
  return it != facets_.end() && *it == face ? static_cast<int>(it - facets_.begin()) : -1;
}

FacetMask PureComplex::full_mask() const {
  if (num_facets() > kMaxMaskEdges) throw BudgetExceeded("too many facets for a subset mask");
  return num_facets() == 0 ? 0 : (FacetMask{1} << num_facets()) - 1;
}

PureComplex complex_from_graph(const Graph& g) {
  std::vector<Simplex> facets;
  for (const auto& e : g.edges()) facets.push_back({e.u, e.v});
  return PureComplex(g.n(), 1, std::move(facets));
}

PureComplex relabel(const PureComplex& c, std::span<const int> ordering) {
  require_permutation(c.n(), ordering);
  std::vector<int> label(static_cast<std::size_t>(c.n() + 1));
  for (std::size_t i = 0; i < ordering.size(); ++i) label[static_cast<std::size_t>(ordering[i])] = static_cast<int>(i) + 1;
  std::vector<Simplex> facets;
  for (const auto& f : c.facets()) {
    Simplex g;
    for (int v : f) g.push_back(label[static_cast<std::size_t>(v)]);
    facets.push_back(std::move(g));
  }
  return PureComplex(c.n(), c.d(), std::move(facets));
}

PhiPartition phi_partition(const PureComplex& c) {
  std::map<std::pair<Simplex, int>, std::vector<int>> blocks;
  for (int i = 0; i < c.num_facets(); ++i) {
    const auto& f = c.facets()[static_cast<std::size_t>(i)];
    blocks[{prefix(f, c.d() - 1), f.back()}].push_back(i);
  }
  PhiPartition out;
  out.block_of.assign(static_cast<std::size_t>(c.num_facets()), -1);
  for (auto& [key, members] : blocks) {
    for (int i : members) out.block_of[static_cast<std::size_t>(i)] = out.N();
    out.blocks.push_back({key.first, key.second, std::move(members)});
  }
  return out;
}

std::vector<Simplex> caged_ridges(const PureComplex& c, FacetMask kept) {
  // A kept facet [sigma, i, k] offers ridge [sigma, k]; the ridge is caged
  // when two kept facets offer it.
  std::map<Simplex, int> offers;
  for (FacetMask m = kept; m != 0; m &= m - 1) {
    const auto& f = c.facets()[static_cast<std::size_t>(std::countr_zero(m))];
    for (std::size_t pos = 0; pos + 1 < f.size(); ++pos) {
      const Simplex ridge = without(f, pos);
      const int i = f[pos];
      const Simplex sigma = prefix(ridge, c.d() - 1);
      if (sigma.empty() || sigma.back() < i) ++offers[ridge];
    }
  }
  std::vector<Simplex> out;
  for (const auto& [ridge, count] : offers)
    if (count >= 2) out.push_back(ridge);
  return out;
}

bool is_cage_free_by_ridges(const PureComplex& c, FacetMask kept) { return caged_ridges(c, kept).empty(); }

bool is_cage_free(const PureComplex& c, const PhiPartition& phi, FacetMask kept) {
  std::vector<bool> used(static_cast<std::size_t>(phi.N()), false);
  for (FacetMask m = kept; m != 0; m &= m - 1) {
    const int b = phi.block_of[static_cast<std::size_t>(std::countr_zero(m))];
    if (used[static_cast<std::size_t>(b)]) return false;
    used[static_cast<std::size_t>(b)] = true;
  }
  (void)c;
  return true;
}

SubsetCounts enumerate_cage_free(const PureComplex& c, const Budget& budget, bool list) {
  if (c.num_facets() > std::min(budget.subset_edges, kMaxMaskEdges))
    throw BudgetExceeded("complex has " + std::to_string(c.num_facets()) + " facets; subset budget is " +
                         std::to_string(budget.subset_edges));
  const PhiPartition phi = phi_partition(c);
  std::vector<FacetMask> block_masks;
  for (const auto& b : phi.blocks) {
    FacetMask m = 0;
    for (int i : b.facets) m |= FacetMask{1} << i;
    block_masks.push_back(m);
  }
  SubsetCounts out;
  out.counts.assign(static_cast<std::size_t>(phi.N() + 1), BigInt(0));
  const FacetMask full = c.full_mask();
  for (FacetMask s = 0;; ++s) {
    const bool free = std::all_of(block_masks.begin(), block_masks.end(),
                                  [s](FacetMask b) { return std::popcount(s & b) <= 1; });
    if (free) {
      out.counts[static_cast<std::size_t>(std::popcount(s))] += 1;
      if (list) out.members.push_back(s);
    }
    if (s == full) break;
  }
  return out;
}

IntPolynomial cf_polynomial(const PureComplex& c) {
  std::vector<long> sizes;
  for (const auto& b : phi_partition(c).blocks) sizes.push_back(static_cast<long>(b.facets.size()));
  return poly_from_linear_factors(sizes);
}

WeightedGF cf_weighted(const PureComplex& c) {
  WeightedGF out = WeightedGF::one();
  for (const auto& b : phi_partition(c).blocks) out = out * WeightedGF::linear_factor(b.facets);
  return out;
}

WeightedGF cf_weighted_by_enumeration(const PureComplex& c, const Budget& budget) {
  const auto found = enumerate_cage_free(c, budget, true);
  const long N = static_cast<long>(found.counts.size()) - 1;
  WeightedGF out;
  for (FacetMask s : found.members) {
    WeightedGF::Monomial vars;
    for (FacetMask m = s; m != 0; m &= m - 1) vars.push_back(std::countr_zero(m));
    out.add_term(std::move(vars), N - std::popcount(s), BigInt(1));
  }
  return out;
}

std::string facet_variable_name(const PureComplex& c, int facet_index) {
  std::string out = "x_{";
  const auto& f = c.facets()[static_cast<std::size_t>(facet_index)];
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + std::to_string(f[i]);
  return out + "}";
}

Graph upper_link(const PureComplex& c, const Simplex& sigma) {
  std::vector<Edge> edges;
  for (const auto& f : c.facets())
    if (prefix(f, c.d() - 1) == sigma) edges.push_back({f[f.size() - 2], f.back()});
  return Graph(c.n(), std::move(edges));
}

std::map<Simplex, Graph> effective_upper_links(const PureComplex& c) {
  std::map<Simplex, Graph> out;
  for (const auto& f : c.facets()) {
    const Simplex sigma = prefix(f, c.d() - 1);
    if (!out.contains(sigma)) out.emplace(sigma, upper_link(c, sigma));
  }
  return out;
}

Graph peak_link(const PureComplex& c, const Simplex& sigma) {
  std::vector<Edge> edges;
  for (const auto& f : c.facets()) {
    if (!std::includes(f.begin(), f.end(), sigma.begin(), sigma.end())) continue;
    Simplex rest;
    std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(), std::back_inserter(rest));
    edges.push_back({rest[0], rest[1]});
  }
  return Graph(c.n(), std::move(edges));
}

Simplex lex_min_peak(const PureComplex& c) {
  if (c.facets().empty()) throw InputError("complex has no facets");
  Simplex best = prefix(c.facets().front(), c.d() - 1);
  for (const auto& f : c.facets()) best = std::min(best, prefix(f, c.d() - 1));
  return best;
}

bool is_simplicial_peo(const PureComplex& c) {
  bool ok = true;
  for_each_subset(c.n(), c.d() - 1, [&](const Simplex& sigma) {
    const int low = sigma.empty() ? 1 : sigma.back() + 1;
    for (int k = low; k <= c.n() && ok; ++k)
      for (int j = low; j < k && ok; ++j)
        for (int i = low; i < j && ok; ++i)
          if (c.has_facet(with(sigma, {i, k})) && c.has_facet(with(sigma, {j, k})) && !c.has_facet(with(sigma, {i, j})))
            ok = false;
  });
  return ok;
}

bool is_simplicial_peo(const PureComplex& c, std::span<const int> ordering) {
  return is_simplicial_peo(relabel(c, ordering));
}

bool is_simplicial_peo_by_links(const PureComplex& c) {
  const auto natural = natural_ordering(c.n());
  for (const auto& [sigma, g] : effective_upper_links(c))
    if (!is_peo(g, natural)) return false;
  return true;
}

bool is_shifted(const PureComplex& c) {
  for (const auto& f : c.facets()) {
    for (std::size_t pos = 0; pos < f.size(); ++pos) {
      for (int u = 1; u < f[pos]; ++u) {
        if (std::binary_search(f.begin(), f.end(), u)) continue;
        if (!c.has_facet(with(without(f, pos), {u}))) return false;
      }
    }
  }
  return true;
}

namespace {

struct TopStructure {
  long homology_rank = 0;
  bool has_leaf = false;
};

TopStructure top_structure(const PureComplex& c, FacetMask kept) {
  std::map<Simplex, int> ridge_row;
  std::map<Simplex, int> ridge_uses;
  std::vector<int> cols;
  for (FacetMask m = kept; m != 0; m &= m - 1) {
    const int fi = std::countr_zero(m);
    cols.push_back(fi);
    const auto& f = c.facets()[static_cast<std::size_t>(fi)];
    for (std::size_t pos = 0; pos < f.size(); ++pos) {
      const Simplex r = without(f, pos);
      ridge_row.emplace(r, static_cast<int>(ridge_row.size()));
      ++ridge_uses[r];
    }
  }
  DenseMatrix<BigInt> boundary(static_cast<Eigen::Index>(ridge_row.size()), static_cast<Eigen::Index>(cols.size()));
  boundary.setConstant(BigInt(0));
  for (std::size_t col = 0; col < cols.size(); ++col) {
    const auto& f = c.facets()[static_cast<std::size_t>(cols[col])];
    for (std::size_t pos = 0; pos < f.size(); ++pos)
      boundary(ridge_row.at(without(f, pos)), static_cast<Eigen::Index>(col)) = BigInt(pos % 2 == 0 ? 1 : -1);
  }
  TopStructure out;
  out.homology_rank = static_cast<long>(cols.size()) - static_cast<long>(fraction_free_rank(boundary));
  out.has_leaf = std::any_of(ridge_uses.begin(), ridge_uses.end(), [](const auto& kv) { return kv.second == 1; });
  return out;
}

nlohmann::json simplices_json(const PureComplex& c, FacetMask kept) {
  auto j = nlohmann::json::array();
  for (FacetMask m = kept; m != 0; m &= m - 1) j.push_back(c.facets()[static_cast<std::size_t>(std::countr_zero(m))]);
  return j;
}

}  // namespace

Report structure_report(const PureComplex& c, FacetMask kept) {
  Report r;
  const auto top = top_structure(c, kept);
  const bool cage_free = is_cage_free_by_ridges(c, kept);
  r.value("top_homology_rank", top.homology_rank);
  r.fact("has_leaf", top.has_leaf);
  r.fact("cage_free", cage_free);
  if (cage_free) {
    r.check("cage_free_top_homology_vanishes", top.homology_rank == 0);
    if (kept != 0) r.check("cage_free_nonempty_has_leaf", top.has_leaf);
  }
  const bool shifted = is_shifted(c);
  const bool peo = is_simplicial_peo(c);
  r.fact("shifted", shifted);
  r.fact("natural_order_is_peo", peo);
  if (!c.facets().empty()) {
    const Simplex sigma = lex_min_peak(c);
    const bool chordal = find_peo(peak_link(c, sigma)).has_value();
    r.value("lex_min_peak", sigma);
    r.fact("lex_min_peak_link_chordal", chordal);
    if (peo) r.check("peo_implies_lex_min_peak_link_chordal", chordal);
  }
  if (shifted) r.check("shifted_implies_peo", peo);
  return r;
}

Report verify_product_formula(const PureComplex& c, const Budget& budget) {
  Report r;
  const int n = c.n();
  const PhiPartition phi = phi_partition(c);
  const int N = phi.N();
  const IntPolynomial cf = cf_polynomial(c);

  // Brute force against the factorization.
  const bool within_budget = c.num_facets() <= std::min(budget.subset_edges, kMaxMaskEdges);
  if (within_budget) {
    const auto found = enumerate_cage_free(c, budget, true);
    r.check("cf_enumeration_matches_factorization",
            r.identity("cf_enumeration_vs_factorization", poly_from_counts(found.counts, static_cast<std::size_t>(N)), cf));
    r.check("cf_weighted_enumeration_matches_factorization", cf_weighted_by_enumeration(c, budget) == cf_weighted(c));

    std::size_t mismatch = 0;
    if (c.num_facets() <= 14) {
      const FacetMask full = c.full_mask();
      for (FacetMask s = 0;; ++s) {
        if (is_cage_free(c, phi, s) != is_cage_free_by_ridges(c, s)) ++mismatch;
        if (s == full) break;
      }
    } else {
      for (FacetMask s : found.members)
        if (!is_cage_free_by_ridges(c, s)) ++mismatch;
      for (const auto& b : phi.blocks)
        for (std::size_t x = 0; x < b.facets.size(); ++x)
          for (std::size_t y = x + 1; y < b.facets.size(); ++y)
            if (is_cage_free_by_ridges(c, (FacetMask{1} << b.facets[x]) | (FacetMask{1} << b.facets[y]))) ++mismatch;
    }
    r.check("cage_criteria_agree", mismatch == 0, std::to_string(mismatch) + " subsets disagree");

    std::size_t structure_failures = 0;
    std::size_t examined = 0;
    for (FacetMask s : found.members) {
      if (examined++ == 2000) break;
      const auto top = top_structure(c, s);
      if (top.homology_rank != 0 || (s != 0 && !top.has_leaf)) {
        if (structure_failures++ == 0) r.witness("cage_free_with_cycle_or_no_leaf", simplices_json(c, s));
      }
    }
    r.check("cage_free_acyclic_with_leaf", structure_failures == 0,
            std::to_string(examined) + " cage-free subcomplexes examined");
  }

  // Product over effective upper links.
  const auto links = effective_upper_links(c);
  const long s = static_cast<long>(links.size());
  IntPolynomial isf_product = IntPolynomial::constant(BigInt(1));
  IntPolynomial signed_chromatic_product = IntPolynomial::constant(BigInt(1));
  BigInt isf_total(1), ao_product(1);
  nlohmann::json link_json = nlohmann::json::object();
  for (const auto& [sigma, g] : links) {
    const IntPolynomial isf = isf_polynomial(g);
    const IntPolynomial p = chromatic_polynomial(g);
    isf_product *= isf;
    signed_chromatic_product *= signed_reflect(p, n);
    isf_total *= isf(BigInt(1));
    BigInt ao = p(BigInt(-1));
    if (n % 2 != 0) ao = -ao;
    ao_product *= ao;
    auto edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    link_json[to_string(sigma)] = edges;
  }
  const long ns = static_cast<long>(n) * s;
  r.check("product_formula",
          r.identity("cf_times_t_ns_vs_t_N_times_isf_product", cf.shifted(ns), isf_product.shifted(N)));
  const BigInt cf_total = cf(BigInt(1));
  r.check("cf_count_equals_isf_count_product", cf_total == isf_total, cf_total.str() + " vs " + isf_total.str());

  const bool peo = is_simplicial_peo(c);
  const bool peo_links = is_simplicial_peo_by_links(c);
  r.fact("natural_order_is_peo", peo);
  r.check("peo_definition_matches_links", peo == peo_links);
  const bool signed_eq =
      r.identity("cf_times_t_ns_vs_t_N_times_signed_chromatic", cf.shifted(ns), signed_chromatic_product.shifted(N));
  r.fact("cf_equals_signed_chromatic_product", signed_eq);
  r.check("cf_signed_chromatic_iff_peo", signed_eq == peo);
  r.check("cf_at_most_ao_product", cf_total <= ao_product, cf_total.str() + " <= " + ao_product.str());
  r.check("cf_equals_ao_product_iff_peo", (cf_total == ao_product) == peo);

  const bool shifted = is_shifted(c);
  r.fact("shifted", shifted);
  if (shifted) r.check("shifted_implies_peo", peo);
  if (!c.facets().empty()) {
    const bool chordal = find_peo(peak_link(c, lex_min_peak(c))).has_value();
    r.fact("lex_min_peak_link_chordal", chordal);
    if (peo) r.check("peo_implies_lex_min_peak_link_chordal", chordal);
  }

  r.value("N", N);
  r.value("effective_peaks", s);
  r.value("cf_total", cf_total.str());
  r.value("ao_product", ao_product.str());
  r.value("upper_links", link_json);
  return r;
}

}  // namespace isfkit
