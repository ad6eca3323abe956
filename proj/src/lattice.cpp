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

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "isfkit/arrangement.hpp"
#include "isfkit/errors.hpp"

namespace isfkit {

namespace {

using GMatrix = DenseMatrix<GaussRational>;

bool in_row_space(const GMatrix& basis, const RowVector<GaussRational>& v) {
  if (basis.rows() == 0) return false;
  return exact_rank(vstack(basis, v)) == basis.rows();
}

}  // namespace

IntersectionLattice::IntersectionLattice(const Arrangement& a, const LatticeBudget& budget) : dim_(a.dim) {
  num_atoms_ = static_cast<int>(a.normals.size());
  if (num_atoms_ > std::min(budget.hyperplanes, 62))
    throw BudgetExceeded(std::to_string(num_atoms_) + " hyperplanes exceed the lattice budget of " +
                         std::to_string(budget.hyperplanes));
  for (const auto& v : a.normals) {
    if (v.cols() != dim_) throw InputError("normal has the wrong length");
    if (std::all_of(v.begin(), v.end(), [](const GaussRational& z) { return z.is_zero(); }))
      throw InputError("zero normal");
  }

  std::unordered_map<std::string, std::size_t> by_key;
  auto add = [&](GMatrix basis) -> std::size_t {
    std::string key = matrix_key(basis);
    if (auto it = by_key.find(key); it != by_key.end()) return it->second;
    if (elements_.size() >= budget.elements)
      throw BudgetExceeded("intersection lattice exceeds " + std::to_string(budget.elements) + " elements");
    Element e;
    e.rank = static_cast<int>(basis.rows());
    for (int h = 0; h < num_atoms_; ++h)
      if (in_row_space(basis, a.normals[static_cast<std::size_t>(h)])) e.atoms |= AtomMask{1} << h;
    e.basis = std::move(basis);
    elements_.push_back(std::move(e));
    by_key.emplace(std::move(key), elements_.size() - 1);
    return elements_.size() - 1;
  };

  add(GMatrix(0, dim_));
  for (int h = 0; h < num_atoms_; ++h) {
    const std::size_t before = elements_.size();
    const std::size_t x = add(reduced_row_echelon(a.normals[static_cast<std::size_t>(h)]));
    if (x < before) throw InputError("repeated hyperplane " + std::to_string(h));
    atom_element_.push_back(x);
  }

  // Close under joins with atoms; elements are processed in creation order,
  // which is nondecreasing in rank.
  for (std::size_t x = 0; x < elements_.size(); ++x) {
    std::vector<std::size_t> row(static_cast<std::size_t>(num_atoms_), x);
    for (int h = 0; h < num_atoms_; ++h) {
      if (elements_[x].atoms >> h & 1U) continue;
      GMatrix stacked = vstack(elements_[x].basis, a.normals[static_cast<std::size_t>(h)]);
      row[static_cast<std::size_t>(h)] = add(reduced_row_echelon(stacked));
    }
    join_atom_.push_back(std::move(row));
  }

  for (std::size_t x = 0; x < elements_.size(); ++x) {
    if (!by_atoms_.emplace(elements_[x].atoms, x).second) throw InternalError("two flats share an atom set");
    if (elements_[x].rank > elements_[top_].rank) top_ = x;
  }

  std::vector<std::size_t> order(elements_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [this](std::size_t p, std::size_t q) { return elements_[p].rank < elements_[q].rank; });
  mobius_.assign(elements_.size(), 0);
  for (std::size_t x : order) {
    if (x == 0) {
      mobius_[x] = 1;
      continue;
    }
    long sum = 0;
    for (std::size_t y : order) {
      if (elements_[y].rank >= elements_[x].rank) break;
      if (leq(y, x)) sum += mobius_[y];
    }
    mobius_[x] = -sum;
  }
}

std::size_t IntersectionLattice::join(std::size_t x, std::size_t y) const {
  std::size_t j = x;
  for (AtomMask m = elements_[y].atoms & ~elements_[x].atoms; m != 0; m &= m - 1) {
    const int a = std::countr_zero(m);
    j = join_atom_[j][static_cast<std::size_t>(a)];
  }
  return j;
}

std::size_t IntersectionLattice::meet(std::size_t x, std::size_t y) const {
  const auto it = by_atoms_.find(elements_[x].atoms & elements_[y].atoms);
  if (it == by_atoms_.end()) throw InternalError("meet is not a flat");
  return it->second;
}

std::size_t IntersectionLattice::join_of_atoms(AtomMask atoms) const {
  std::size_t j = 0;
  for (AtomMask m = atoms; m != 0; m &= m - 1) j = join_atom_[j][static_cast<std::size_t>(std::countr_zero(m))];
  return j;
}

IntPolynomial characteristic_polynomial(const IntersectionLattice& l) {
  std::vector<BigInt> c(static_cast<std::size_t>(l.rank() + 1), BigInt(0));
  for (std::size_t x = 0; x < l.size(); ++x) c[static_cast<std::size_t>(l.rank() - l.rank(x))] += l.mobius(x);
  return IntPolynomial(std::move(c));
}

AtomOrder AtomOrder::identity(int atoms) {
  AtomOrder o;
  for (int a = 0; a < atoms; ++a) o.rank.push_back(a);
  return o;
}

namespace {

// Rank of the join of every atom subset, indexed by mask.
std::vector<int> subset_ranks(const IntersectionLattice& l, const Budget& budget) {
  const int m = l.num_atoms();
  if (m > std::min(budget.subset_edges, 30)) throw BudgetExceeded(std::to_string(m) + " atoms exceed the subset budget");
  std::vector<std::size_t> elem(std::size_t{1} << m, 0);
  std::vector<int> ranks(elem.size(), 0);
  for (std::size_t s = 1; s < elem.size(); ++s) {
    const int low = std::countr_zero(s);
    elem[s] = l.join(elem[s & (s - 1)], l.atom(low));
    ranks[s] = l.rank(elem[s]);
  }
  return ranks;
}

std::vector<AtomMask> circuits_from_ranks(const std::vector<int>& ranks, int m) {
  std::vector<AtomMask> out;
  for (std::size_t s = 1; s < ranks.size(); ++s) {
    if (ranks[s] == std::popcount(s)) continue;
    bool minimal = true;
    for (int a = 0; a < m && minimal; ++a)
      if ((s >> a & 1U) && ranks[s & ~(std::size_t{1} << a)] != std::popcount(s) - 1) minimal = false;
    if (minimal) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<AtomMask> lattice_circuits(const IntersectionLattice& l, const Budget& budget) {
  return circuits_from_ranks(subset_ranks(l, budget), l.num_atoms());
}

std::vector<BigInt> lattice_nbc(const IntersectionLattice& l, const AtomOrder& order, const Budget& budget,
                                std::vector<AtomMask>* members) {
  const int m = l.num_atoms();
  const auto ranks = subset_ranks(l, budget);
  const AtomOrder ord = order.rank.empty() ? AtomOrder::identity(m) : order;
  if (static_cast<int>(ord.rank.size()) != m) throw InputError("atom order has the wrong length");

  std::vector<char> broken(ranks.size(), 0);
  for (AtomMask c : circuits_from_ranks(ranks, m)) {
    int smallest = -1;
    for (AtomMask r = c; r != 0; r &= r - 1) {
      const int a = std::countr_zero(r);
      if (smallest < 0 || ord.rank[static_cast<std::size_t>(a)] < ord.rank[static_cast<std::size_t>(smallest)]) smallest = a;
    }
    broken[c & ~(AtomMask{1} << smallest)] = 1;
  }
  // contains[s]: some subset of s is a broken circuit.
  std::vector<char> contains(ranks.size(), 0);
  std::vector<BigInt> counts(static_cast<std::size_t>(l.rank() + 1), BigInt(0));
  for (std::size_t s = 0; s < ranks.size(); ++s) {
    bool c = broken[s] != 0;
    for (AtomMask r = s; r != 0 && !c; r &= r - 1) c = contains[s & ~(std::size_t{1} << std::countr_zero(r))] != 0;
    contains[s] = c;
    if (c) continue;
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size >= counts.size()) throw InternalError("nbc set larger than the lattice rank");
    counts[size] += 1;
    if (members) members->push_back(s);
  }
  return counts;
}

std::vector<AtomMask> atom_partition(const IntersectionLattice& l, std::span<const std::size_t> multichain) {
  std::vector<AtomMask> blocks(multichain.size(), 0);
  for (std::size_t i = 1; i < multichain.size(); ++i)
    blocks[i] = l.element(multichain[i]).atoms & ~l.element(multichain[i - 1]).atoms;
  return blocks;
}

std::vector<std::size_t> prefix_multichain(const LabeledMultigraph& g, const IntersectionLattice& l) {
  std::vector<std::size_t> chain{l.bottom()};
  AtomMask prefix = 0;
  for (int m = 1; m <= g.n(); ++m) {
    for (int h = 0; h < g.num_edges(); ++h)
      if (g.edges()[static_cast<std::size_t>(h)].j == m) prefix |= AtomMask{1} << h;
    chain.push_back(l.join_of_atoms(prefix));
  }
  return chain;
}

std::vector<BigInt> atomic_transversals(const IntersectionLattice& l, std::span<const AtomMask> blocks,
                                        std::vector<AtomMask>* members) {
  std::vector<BigInt> counts(blocks.size() + 1, BigInt(0));
  AtomMask covered = 0;
  for (AtomMask b : blocks) covered |= b;
  const int m = l.num_atoms();
  if (m > 30) throw BudgetExceeded("too many atoms for a transversal sweep");
  for (std::size_t s = 0; s < (std::size_t{1} << m); ++s) {
    if ((s & ~covered) != 0) continue;
    const bool ok = std::all_of(blocks.begin(), blocks.end(), [s](AtomMask b) { return std::popcount(s & b) <= 1; });
    if (!ok) continue;
    counts[static_cast<std::size_t>(std::popcount(s))] += 1;
    if (members) members->push_back(s);
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

std::vector<bool> modular_elements(const IntersectionLattice& l) {
  std::vector<bool> out(l.size(), true);
  for (std::size_t x = 0; x < l.size(); ++x) {
    for (std::size_t y = 0; y < l.size() && out[x]; ++y)
      if (l.rank(x) + l.rank(y) != l.rank(l.join(x, y)) + l.rank(l.meet(x, y))) out[x] = false;
  }
  return out;
}

std::optional<std::vector<std::size_t>> modular_chain(const IntersectionLattice& l) {
  const auto modular = modular_elements(l);
  std::vector<std::vector<std::size_t>> by_rank(static_cast<std::size_t>(l.rank() + 1));
  for (std::size_t x = 0; x < l.size(); ++x)
    if (modular[x]) by_rank[static_cast<std::size_t>(l.rank(x))].push_back(x);
  std::vector<std::size_t> chain{l.bottom()};
  std::vector<bool> dead(l.size(), false);
  auto dfs = [&](auto&& self, std::size_t x) -> bool {
    if (x == l.top()) return true;
    for (std::size_t y : by_rank[static_cast<std::size_t>(l.rank(x) + 1)]) {
      if (dead[y] || !l.leq(x, y)) continue;
      chain.push_back(y);
      if (self(self, y)) return true;
      chain.pop_back();
      dead[y] = true;
    }
    return false;
  };
  if (!dfs(dfs, l.bottom())) return std::nullopt;
  return chain;
}

}  // namespace isfkit
