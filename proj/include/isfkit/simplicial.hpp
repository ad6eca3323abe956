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

#ifndef ISFKIT_SIMPLICIAL_HPP
#define ISFKIT_SIMPLICIAL_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "isfkit/graph.hpp"
#include "isfkit/polynomial.hpp"
#include "isfkit/report.hpp"
#include "isfkit/weighted_gf.hpp"

namespace isfkit {

/// Vertex set of a face, strictly increasing.
using Simplex = std::vector<int>;

/// Bit i selects facet i of the parent complex.
using FacetMask = std::uint64_t;

/**
 * Pure d-dimensional complex on {1..n}, given by its facets.
 *
 * Facets are stored sorted, each as an increasing vertex list; facet indices
 * refer to that order.
 */
class PureComplex {
 public:
  PureComplex() = default;
  /// Throws InputError unless d >= 1 and every facet is a (d+1)-subset of
  /// {1..n}; duplicates are rejected. Vertices within a facet may be unsorted.
  PureComplex(int n, int d, std::vector<Simplex> facets);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  int num_facets() const { return static_cast<int>(facets_.size()); }
  /// -1 if absent; face must be sorted.
  int facet_index(const Simplex& face) const;
  bool has_facet(const Simplex& face) const { return facet_index(face) >= 0; }
  FacetMask full_mask() const;
  friend bool operator==(const PureComplex& a, const PureComplex& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.facets_ == b.facets_;
  }

 private:
  int n_ = 0;
  int d_ = 1;
  std::vector<Simplex> facets_;
};

/// One-dimensional complex whose facets are the edges of g.
PureComplex complex_from_graph(const Graph& g);
/// Vertex ordering[i] is renamed i + 1.
PureComplex relabel(const PureComplex& c, std::span<const int> ordering);

std::string to_string(const Simplex& s);

/// Facets [sigma, j, k] grouped by (sigma, k); sigma holds the d-1 smallest
/// vertices and k the largest.
struct PhiBlock {
  Simplex sigma;
  int k = 0;
  std::vector<int> facets;  // facet indices, increasing
};

struct PhiPartition {
  std::vector<PhiBlock> blocks;  // sorted by (sigma, k)
  std::vector<int> block_of;     // facet index -> block index
  int N() const { return static_cast<int>(blocks.size()); }
};

PhiPartition phi_partition(const PureComplex& c);

/// Ridges [sigma, k] with two kept facets [sigma, i, k], [sigma, j, k].
std::vector<Simplex> caged_ridges(const PureComplex& c, FacetMask kept);
/// At most one kept facet per block.
bool is_cage_free(const PureComplex& c, const PhiPartition& phi, FacetMask kept);
/// Scans every ridge of the kept facets for a cage.
bool is_cage_free_by_ridges(const PureComplex& c, FacetMask kept);

/// counts[m] = cage-free spanning subcomplexes with m facets. Throws
/// BudgetExceeded when the facet count exceeds budget.subset_edges.
SubsetCounts enumerate_cage_free(const PureComplex& c, const Budget& budget = {}, bool list = false);
/// prod over blocks of (t + |Phi_{sigma,k}|).
IntPolynomial cf_polynomial(const PureComplex& c);
/// Same product with t + sum of facet variables; variable ids are facet indices.
WeightedGF cf_weighted(const PureComplex& c);
WeightedGF cf_weighted_by_enumeration(const PureComplex& c, const Budget& budget = {});
/// "x_{1,2,4}" naming for facet-indexed weight variables.
std::string facet_variable_name(const PureComplex& c, int facet_index);

/// Upper link of a peak sigma: edges ij on {1..n} with sigma < i < j and
/// [sigma, i, j] a facet.
Graph upper_link(const PureComplex& c, const Simplex& sigma);
/// Every peak (a (d-1)-subset of {1..n}) whose upper link has an edge.
std::map<Simplex, Graph> effective_upper_links(const PureComplex& c);
/// Ordinary link of a peak: edges ij with sigma + {i, j} a facet.
Graph peak_link(const PureComplex& c, const Simplex& sigma);
/// Lexicographically smallest peak contained in a facet.
Simplex lex_min_peak(const PureComplex& c);

/// For all peaks sigma and sigma < i < j < k: [sigma,i,k], [sigma,j,k]
/// facets imply [sigma,i,j] a facet, after relabeling by ordering.
bool is_simplicial_peo(const PureComplex& c, std::span<const int> ordering);
bool is_simplicial_peo(const PureComplex& c);
/// Same predicate as "every upper link is PEO-ordered by its labels".
bool is_simplicial_peo_by_links(const PureComplex& c);

/// Replacing a vertex of a facet by a smaller absent vertex gives a facet.
bool is_shifted(const PureComplex& c);

/// CF(t) t^{ns} = t^N prod ISF(G_sigma, t) over effective peaks, cf at 1,
/// the link criterion for PEOs and the acyclic orientation bound.
Report verify_product_formula(const PureComplex& c, const Budget& budget = {});

/// Top homology rank of the kept facets, leaf existence, and for the parent
/// complex: shifted flag and chordality of the lex-min peak's link.
Report structure_report(const PureComplex& c, FacetMask kept);

}  // namespace isfkit

#endif  // ISFKIT_SIMPLICIAL_HPP
