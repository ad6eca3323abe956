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

#ifndef ISFKIT_ARRANGEMENT_HPP
#define ISFKIT_ARRANGEMENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isfkit/graph.hpp"
#include "isfkit/linalg.hpp"
#include "isfkit/numeric.hpp"
#include "isfkit/polynomial.hpp"
#include "isfkit/report.hpp"

namespace isfkit {

/// Edge i-j of a labeled multigraph. i == 0 marks an edge 0j, whose label is
/// unused and stored as zero; otherwise 1 <= i < j and the label is nonzero.
struct MultiEdge {
  int i = 0;
  int j = 0;
  GaussRational label;
  bool is_zero_edge() const { return i == 0; }
};

std::string to_string(const MultiEdge& e);

/**
 * Multigraph on {0..n}: at most one edge 0k per k, and labeled edges ij with
 * pairwise distinct labels on each vertex pair.
 *
 * edges() is ordered by larger endpoint j; within one j the labeled edges
 * keep their input order and the edge 0j comes last. Hyperplane and atom
 * indices follow this order.
 */
class LabeledMultigraph {
 public:
  LabeledMultigraph() = default;
  /// Throws InputError on any violated invariant. Labeled edges may be given
  /// with i > j; the label then describes x_j = label x_i and is inverted.
  LabeledMultigraph(int n, std::vector<int> zero_edges, std::vector<MultiEdge> labeled_edges);

  int n() const { return n_; }
  const std::vector<MultiEdge>& edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool has_zero_edge(int k) const;
  /// An edge ij (i < j) carries exactly this label.
  bool has_labeled_edge(int i, int j, const GaussRational& label) const;
  std::vector<int> zero_edges() const;
  std::vector<MultiEdge> labeled_edges() const;
  /// All labels are +1 or -1 and each vertex pair carries at most two edges.
  bool is_signed() const;
  bool is_real() const;

  /// Simple graph with every edge labeled 1 and vertex 0 isolated.
  static LabeledMultigraph from_graph(const Graph& g);

 private:
  int n_ = 0;
  std::vector<MultiEdge> edges_;
};

/// Hyperplanes through the origin of C^dim, one normal row per hyperplane.
struct Arrangement {
  int dim = 0;
  std::vector<RowVector<GaussRational>> normals;

  bool is_real() const;
};

/// ij^z has normal e_i - z e_j; 0k has normal e_k.
Arrangement build_arrangement(const LabeledMultigraph& g);

/// Bit a marks atom a.
using AtomMask = std::uint64_t;

struct LatticeBudget {
  int hyperplanes = 20;
  std::size_t elements = 5000;
};

/**
 * Lattice of intersections of a central arrangement, ordered by reverse
 * inclusion. Each element is stored as the reduced row-echelon basis of the
 * span of its normals; element 0 is the ambient space and atom a is the
 * hyperplane a of the arrangement.
 */
class IntersectionLattice {
 public:
  struct Element {
    DenseMatrix<GaussRational> basis;
    int rank = 0;
    AtomMask atoms = 0;  // hyperplanes containing the subspace
  };

  /// Throws BudgetExceeded beyond the hyperplane or element cap and
  /// InputError for zero or repeated hyperplanes.
  explicit IntersectionLattice(const Arrangement& a, const LatticeBudget& budget = {});

  int dim() const { return dim_; }
  std::size_t size() const { return elements_.size(); }
  const Element& element(std::size_t x) const { return elements_[x]; }
  int num_atoms() const { return num_atoms_; }
  std::size_t atom(int a) const { return atom_element_[static_cast<std::size_t>(a)]; }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return top_; }
  int rank() const { return elements_[top_].rank; }
  int rank(std::size_t x) const { return elements_[x].rank; }
  long mobius(std::size_t x) const { return mobius_[x]; }

  bool leq(std::size_t x, std::size_t y) const { return (elements_[x].atoms & ~elements_[y].atoms) == 0; }
  std::size_t join(std::size_t x, std::size_t y) const;
  std::size_t meet(std::size_t x, std::size_t y) const;
  /// Join of a set of atoms.
  std::size_t join_of_atoms(AtomMask atoms) const;

 private:
  int dim_ = 0;
  int num_atoms_ = 0;
  std::vector<Element> elements_;
  std::vector<std::size_t> atom_element_;
  std::vector<std::vector<std::size_t>> join_atom_;  // element x, atom a -> x v a
  std::map<AtomMask, std::size_t> by_atoms_;
  std::vector<long> mobius_;
  std::size_t top_ = 0;
};

/// sum over x of mu(0, x) t^{rank(L) - rank(x)}.
IntPolynomial characteristic_polynomial(const IntersectionLattice& l);

/// Atom order as rank per atom index; identity when empty.
struct AtomOrder {
  std::vector<int> rank;
  static AtomOrder identity(int atoms);
};

/// nbc counts by size, computed by filtering subsets against the broken
/// circuits. Throws BudgetExceeded beyond budget.subset_edges atoms.
std::vector<BigInt> lattice_nbc(const IntersectionLattice& l, const AtomOrder& order, const Budget& budget = {},
                                std::vector<AtomMask>* members = nullptr);
std::vector<AtomMask> lattice_circuits(const IntersectionLattice& l, const Budget& budget = {});

/// Partition of the atoms induced by a multichain z_0 <= ... <= z_n: block i
/// holds atoms below z_i but not below z_{i-1}. Entry 0 is empty.
std::vector<AtomMask> atom_partition(const IntersectionLattice& l, std::span<const std::size_t> multichain);
/// V_0 <= ... <= V_n with V_m the join of hyperplanes from edges with larger
/// endpoint at most m.
std::vector<std::size_t> prefix_multichain(const LabeledMultigraph& g, const IntersectionLattice& l);
/// Atom sets with at most one atom per block; counts by size.
std::vector<BigInt> atomic_transversals(const IntersectionLattice& l, std::span<const AtomMask> blocks,
                                        std::vector<AtomMask>* members = nullptr);

/// x with rank(x) + rank(y) = rank(x v y) + rank(x ^ y) for every y.
std::vector<bool> modular_elements(const IntersectionLattice& l);
/// A saturated chain of modular elements from bottom to top, if one exists.
std::optional<std::vector<std::size_t>> modular_chain(const IntersectionLattice& l);
inline bool is_supersolvable(const IntersectionLattice& l) { return modular_chain(l).has_value(); }

/// prod_k (t + |E_k|), E_k the edges jk (j < k) and 0k.
IntPolynomial multigraph_isf_polynomial(const LabeledMultigraph& g);
/// Brute force over edge subsets; parallel edges count as a cycle.
SubsetCounts enumerate_multigraph_isf(const LabeledMultigraph& g, const Budget& budget = {}, bool list = false);
/// Same predicate checked on the forest structure directly.
bool is_multigraph_isf_by_paths(const LabeledMultigraph& g, EdgeMask subset);
bool is_multigraph_isf(const LabeledMultigraph& g, EdgeMask subset);

struct PerfectLabeling {
  bool perfect = true;
  int condition = 0;            // first violated condition, 1..3
  std::vector<int> vertices;    // (i, j, k) for condition 1, (j, k) otherwise
  std::vector<MultiEdge> edges; // the edges that demand a missing one
  std::string detail;
};

/// Condition 1 over nonzero i < j < k; conditions 2 and 3 over j < k.
PerfectLabeling perfect_labeling(const LabeledMultigraph& g);
inline bool is_perfectly_labeled(const LabeledMultigraph& g) { return perfect_labeling(g).perfect; }

/// (-1)^rank t^{n-rank} chi(L, -t).
IntPolynomial signed_characteristic(const IntersectionLattice& l, int n);

/// Regions of a real arrangement by deletion-restriction over rational
/// normals. Throws InputError for non-real normals.
BigInt count_regions_by_deletion_restriction(const Arrangement& a);

/// Colorings c: {1..n} -> {-s..s} with c(i) != e c(j) for each edge ij^e and
/// c(k) != 0 for each edge 0k. Throws InputError unless g is signed.
BigInt signed_chromatic_count(const LabeledMultigraph& g, int s);

struct MultigraphVerifyOptions {
  Budget budget;
  LatticeBudget lattice;
  int random_orders = 3;
  std::uint64_t seed = 0;
  int max_signed_s = 3;
  int region_recursion_hyperplanes = 12;
};

/// ISF against the characteristic polynomial, chain factorization, NBC and
/// transversal counts, and supersolvability.
Report verify_isf_chi(const LabeledMultigraph& g, const MultigraphVerifyOptions& options = {});
/// Betti numbers beta_m = nbc_m of the complement, and for real labels the
/// region count by two routes.
Report topology_report(const LabeledMultigraph& g, const MultigraphVerifyOptions& options = {});
/// Signed coloring counts against t^{n-rank} chi(L, t) at t = 2s + 1.
Report signed_report(const LabeledMultigraph& g, const MultigraphVerifyOptions& options = {});

}  // namespace isfkit

#endif  // ISFKIT_ARRANGEMENT_HPP
