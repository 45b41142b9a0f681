#pragma once

// Finite groups of unimodular integer matrices acting on Z^rank, stored by
// explicit element lists.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "amitsur/errors.hpp"
#include "amitsur/intlin.hpp"
#include "amitsur/numpoly.hpp"

namespace amitsur {

inline constexpr std::size_t kDefaultGroupCap = 20000;

class LatticeGroupAction {
 public:
  LatticeGroupAction() = default;

  /// Takes an element list that is already closed, deduplicated and starts
  /// with the identity. Use generate() for anything else.
  LatticeGroupAction(std::size_t rank, std::vector<IntegerMatrix> elements, std::vector<IntegerMatrix> generators)
      : rank_(rank), elements_(std::move(elements)), generators_(std::move(generators)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  }

  std::size_t rank() const noexcept { return rank_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<IntegerMatrix>& elements() const noexcept { return elements_; }
  const IntegerMatrix& element(std::size_t i) const { return elements_[i]; }
  const std::vector<IntegerMatrix>& generators() const noexcept { return generators_; }

  std::optional<std::size_t> index_of(const IntegerMatrix& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool has(const IntegerMatrix& g) const { return index_.count(g) != 0; }

  bool is_subgroup_of(const LatticeGroupAction& g) const {
    return rank_ == g.rank_ && std::all_of(elements_.begin(), elements_.end(),
                                           [&](const IntegerMatrix& h) { return g.has(h); });
  }

  /// Equality as subsets of GL_rank(Z).
  bool same_elements(const LatticeGroupAction& other) const {
    return order() == other.order() && is_subgroup_of(other);
  }

 private:
  std::size_t rank_ = 0;
  std::vector<IntegerMatrix> elements_;
  std::vector<IntegerMatrix> generators_;
  std::map<IntegerMatrix, std::size_t> index_;
};

/// Closure of `generators` by breadth-first right multiplication from the
/// identity; the element order is deterministic.
inline LatticeGroupAction generate(std::size_t rank, std::span<const IntegerMatrix> generators,
                                   std::size_t cap = kDefaultGroupCap) {
  for (const auto& g : generators) {
    if (g.rows() != rank || g.cols() != rank) throw DimensionMismatch("generator has the wrong shape");
    if (abs(determinant(g)) != 1) throw NotUnimodular("generator is not unimodular: " + g.to_string());
  }
  std::vector<IntegerMatrix> elements{IntegerMatrix::identity(rank)};
  std::set<IntegerMatrix> seen{elements.front()};
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const auto& g : generators) {
      IntegerMatrix product = elements[next] * g;
      if (seen.insert(product).second) {
        if (elements.size() >= cap)
          throw GroupTooLarge("group closure exceeds the cap of " + std::to_string(cap) + " elements");
        elements.push_back(std::move(product));
      }
    }
  }
  return LatticeGroupAction(rank, std::move(elements),
                            std::vector<IntegerMatrix>(generators.begin(), generators.end()));
}

inline LatticeGroupAction generate(std::size_t rank, const std::vector<IntegerMatrix>& generators,
                                   std::size_t cap = kDefaultGroupCap) {
  return generate(rank, std::span<const IntegerMatrix>(generators), cap);
}

inline LatticeGroupAction trivial_group(std::size_t rank) { return generate(rank, std::vector<IntegerMatrix>{}); }

namespace detail {

struct MultiplicationTable {
  std::size_t n = 0;
  std::vector<std::size_t> product;  // product[i*n + j] = index of g_i g_j
};

inline MultiplicationTable multiplication_table(const LatticeGroupAction& g) {
  MultiplicationTable t{g.order(), std::vector<std::size_t>(g.order() * g.order())};
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) t.product[i * t.n + j] = *g.index_of(g.element(i) * g.element(j));
  return t;
}

/// Sorted index set of the subgroup generated by `gens` (indices into G).
inline std::vector<std::size_t> closure(const MultiplicationTable& t, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(t.n, false);
  std::vector<std::size_t> members{0};
  in[0] = true;
  for (std::size_t next = 0; next < members.size(); ++next)
    for (std::size_t g : gens) {
      const std::size_t p = t.product[members[next] * t.n + g];
      if (!in[p]) {
        in[p] = true;
        members.push_back(p);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace detail

/// The subgroup of G on the given element indices, in G's element order.
inline LatticeGroupAction subgroup_from_indices(const LatticeGroupAction& g, const std::vector<std::size_t>& indices,
                                                std::vector<IntegerMatrix> generators = {}) {
  std::vector<IntegerMatrix> elements;
  elements.reserve(indices.size());
  for (std::size_t i : indices) elements.push_back(g.element(i));
  return LatticeGroupAction(g.rank(), std::move(elements), std::move(generators));
}

/// The subgroup of G generated by `gens`, listed in G's element order.
inline LatticeGroupAction subgroup_generated(const LatticeGroupAction& g, const std::vector<IntegerMatrix>& gens) {
  std::vector<std::size_t> gen_indices;
  for (const auto& m : gens) {
    auto i = g.index_of(m);
    if (!i) throw NotASubgroup("generator is not an element of the group");
    gen_indices.push_back(*i);
  }
  return subgroup_from_indices(g, detail::closure(detail::multiplication_table(g), gen_indices), gens);
}

/// Every subgroup of G: cyclic subgroups first, then joins of pairs until no
/// new subgroup appears. Each subgroup is listed in G's element order; the
/// result is ordered by (order, element indices).
inline std::vector<LatticeGroupAction> subgroups(const LatticeGroupAction& g, std::size_t cap = kDefaultGroupCap) {
  if (g.order() > cap) throw GroupTooLarge("group exceeds the subgroup enumeration cap");
  const auto table = detail::multiplication_table(g);
  std::set<std::vector<std::size_t>> found;
  std::vector<std::vector<std::size_t>> queue;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> generators_of;
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto c = detail::closure(table, {i});
    if (found.insert(c).second) {
      queue.push_back(c);
      generators_of[c] = i == 0 ? std::vector<std::size_t>{} : std::vector<std::size_t>{i};
    }
  }
  for (std::size_t a = 0; a < queue.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      std::vector<std::size_t> gens = generators_of[queue[a]];
      const auto& more = generators_of[queue[b]];
      gens.insert(gens.end(), more.begin(), more.end());
      auto join = detail::closure(table, gens);
      if (found.insert(join).second) {
        queue.push_back(join);
        generators_of[join] = gens;
      }
    }
  }
  std::vector<std::vector<std::size_t>> sorted(found.begin(), found.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  std::vector<LatticeGroupAction> out;
  out.reserve(sorted.size());
  for (const auto& s : sorted) {
    std::vector<IntegerMatrix> gens;
    for (std::size_t i : generators_of[s]) gens.push_back(g.element(i));
    out.push_back(subgroup_from_indices(g, s, std::move(gens)));
  }
  return out;
}

struct Orbit {
  IntVector representative;
  std::vector<IntVector> members;
};

inline Orbit orbit(const LatticeGroupAction& g, const IntVector& v) {
  if (v.size() != g.rank()) throw DimensionMismatch("vector length does not match group rank");
  Orbit o{v, {}};
  std::set<IntVector> seen;
  for (const auto& m : g.elements()) {
    IntVector w = m * v;
    if (seen.insert(w).second) o.members.push_back(std::move(w));
  }
  return o;
}

/// Sum of the distinct members of the orbit; always G-fixed.
inline IntVector orbit_sum(const LatticeGroupAction& g, const IntVector& v) {
  IntVector total(g.rank());
  for (const auto& w : orbit(g, v).members) total = total + w;
  return total;
}

/// Vectors fixed by every element: the kernel of the stacked (g - I).
inline Sublattice fixed_lattice(const LatticeGroupAction& g) {
  const std::size_t r = g.rank();
  IntegerMatrix stacked(r * g.order(), r);
  const IntegerMatrix id = IntegerMatrix::identity(r);
  for (std::size_t k = 0; k < g.order(); ++k) {
    const IntegerMatrix d = g.element(k) - id;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) stacked(k * r + i, j) = d(i, j);
  }
  return kernel_basis(stacked);
}

/// v -> sum_{gH in G/H} g v on the H-fixed vectors.
struct CosetSumMap {
  Sublattice domain;                       // fixed_lattice(H)
  std::vector<std::size_t> representatives;  // indices into G, one per left coset
  IntegerMatrix matrix;                    // sum of the representatives, rank x rank

  IntVector operator()(const IntVector& v) const { return matrix * v; }
};

inline CosetSumMap coset_sum_map(const LatticeGroupAction& g, const LatticeGroupAction& h) {
  if (!h.is_subgroup_of(g)) throw NotASubgroup("H is not contained in G");
  CosetSumMap map{fixed_lattice(h), {}, IntegerMatrix(g.rank(), g.rank())};
  std::vector<bool> covered(g.order(), false);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (covered[i]) continue;
    map.representatives.push_back(i);
    map.matrix = map.matrix + g.element(i);
    for (const auto& hm : h.elements()) covered[*g.index_of(g.element(i) * hm)] = true;
  }
  return map;
}

/// f o g == f for every element g, compared through interpolation on S_deg.
inline bool is_invariant_polynomial(const NumericalPolynomial& f, const LatticeGroupAction& g) {
  if (f.num_vars() != g.rank()) throw DimensionMismatch("polynomial arity does not match group rank");
  for (const auto& m : g.elements()) {
    auto composed = from_values(f.num_vars(), f.degree(), [&](const IntVector& x) { return eval(f, m * x); });
    if (!(composed == f)) return false;
  }
  return true;
}

/// Index of the first generator (or element, when no generators are recorded)
/// under which f is not invariant.
inline std::optional<std::size_t> first_non_invariant_generator(const NumericalPolynomial& f,
                                                                const LatticeGroupAction& g) {
  if (f.num_vars() != g.rank()) throw DimensionMismatch("polynomial arity does not match group rank");
  const auto& gens = g.generators().empty() ? g.elements() : g.generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    auto composed = from_values(f.num_vars(), f.degree(), [&](const IntVector& x) { return eval(f, gens[k] * x); });
    if (!(composed == f)) return k;
  }
  return std::nullopt;
}

/// Element indices of the stabilizer of v in G.
inline std::vector<std::size_t> stabilizer_indices(const LatticeGroupAction& g, const IntVector& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.element(i) * v == v) out.push_back(i);
  return out;
}

/// True when gHg^{-1} == K for some g in G.
inline bool are_conjugate(const LatticeGroupAction& g, const LatticeGroupAction& h, const LatticeGroupAction& k) {
  if (h.order() != k.order()) return false;
  for (const auto& x : g.elements()) {
    const IntegerMatrix x_inv = inverse_unimodular(x);
    bool all = true;
    for (const auto& e : h.elements())
      if (!k.has(x * e * x_inv)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

}  // namespace amitsur
