#pragma once

// Smooth complete toric varieties through 0 -> M -> TDiv -> Pic -> 0.
// Fan symmetries act on Pic; Am^T and surface chi are built on top.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "amitsur/errors.hpp"
#include "amitsur/intlin.hpp"
#include "amitsur/latgroup.hpp"
#include "amitsur/numerical.hpp"
#include "amitsur/numpoly.hpp"

namespace amitsur {

struct Fan {
  std::size_t lattice_rank = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> max_cones;  // 0-based ray indices
};

struct RayClass {
  IntVector pic_class;
  std::vector<std::size_t> rays;
  std::size_t multiplicity() const { return rays.size(); }
};

struct ToricPicard {
  Fan fan;
  std::size_t tdiv_rank = 0;
  IntegerMatrix m_to_tdiv;    // r x n, row i is the ray u_i
  std::size_t pic_rank = 0;
  IntegerMatrix tdiv_to_pic;  // p x r, surjective, kernel = image of m_to_tdiv
  IntegerMatrix pic_to_tdiv;  // r x p with tdiv_to_pic * pic_to_tdiv = I
  std::vector<std::size_t> basis_cone;  // the cone whose complement gives the Pic basis
  std::vector<std::size_t> basis_rays;  // Pic basis vector k is the class of ray basis_rays[k]
  std::vector<IntVector> ray_classes;
  std::vector<RayClass> classes;        // distinct classes in order of first ray
  std::vector<std::size_t> cyclic_order;  // counterclockwise ray order (surfaces only)

  IntVector class_of(const IntVector& tdiv) const { return tdiv_to_pic * tdiv; }
};

namespace detail {

inline IntegerMatrix ray_matrix(const Fan& fan, const std::vector<std::size_t>& indices) {
  std::vector<IntVector> cols;
  for (std::size_t i : indices) cols.push_back(fan.rays[i]);
  return IntegerMatrix::from_columns(fan.lattice_rank, cols);
}

// Half-plane then cross product: a total counterclockwise order starting at angle 0.
inline bool angle_less(const IntVector& a, const IntVector& b) {
  auto half = [](const IntVector& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
  if (half(a) != half(b)) return half(a) < half(b);
  return a[0] * b[1] - a[1] * b[0] > 0;
}

inline std::vector<std::size_t> sorted_cone(std::vector<std::size_t> c) {
  std::sort(c.begin(), c.end());
  return c;
}

inline std::vector<std::size_t> check_surface_completeness(const Fan& fan) {
  const std::size_t r = fan.rays.size();
  if (r < 3) throw NotComplete("a complete surface fan needs at least three rays");
  std::vector<std::size_t> order(r);
  for (std::size_t i = 0; i < r; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return angle_less(fan.rays[a], fan.rays[b]); });
  std::set<std::vector<std::size_t>> expected;
  for (std::size_t k = 0; k < r; ++k) {
    const IntVector& a = fan.rays[order[k]];
    const IntVector& b = fan.rays[order[(k + 1) % r]];
    if (a[0] * b[1] - a[1] * b[0] <= 0) throw NotComplete("consecutive rays span an angle of at least pi");
    expected.insert(sorted_cone({order[k], order[(k + 1) % r]}));
  }
  std::set<std::vector<std::size_t>> given;
  for (const auto& c : fan.max_cones) given.insert(sorted_cone(c));
  if (given != expected) throw NotComplete("maximal cones are not the cones between consecutive rays");
  return order;
}

// Every codimension-one face lies in exactly two maximal cones and every ray is used.
inline void check_pseudomanifold(const Fan& fan) {
  std::map<std::vector<std::size_t>, std::size_t> facet_count;
  std::set<std::size_t> used;
  for (const auto& cone : fan.max_cones) {
    const auto c = sorted_cone(cone);
    used.insert(c.begin(), c.end());
    for (std::size_t skip = 0; skip < c.size(); ++skip) {
      std::vector<std::size_t> facet;
      for (std::size_t k = 0; k < c.size(); ++k)
        if (k != skip) facet.push_back(c[k]);
      ++facet_count[facet];
    }
  }
  if (used.size() != fan.rays.size()) throw NotComplete("some ray lies in no maximal cone");
  for (const auto& [facet, count] : facet_count)
    if (count != 2) throw NotComplete("a wall is not shared by exactly two maximal cones");
}

}  // namespace detail

/// Checks the fan and builds the exact sequence. The Pic basis is the set of
/// classes of the rays outside the lexicographically smallest maximal cone.
inline ToricPicard validate(const Fan& fan) {
  const std::size_t n = fan.lattice_rank;
  if (n == 0) throw InvalidFan("lattice rank must be positive");
  std::set<IntVector> distinct;
  for (const auto& u : fan.rays) {
    if (u.size() != n) throw InvalidFan("ray has the wrong length");
    Integer g = 0;
    for (const auto& x : u) g = gcd(g, x);
    if (g != 1) throw NonPrimitiveRay("ray is not primitive");
    if (!distinct.insert(u).second) throw InvalidFan("rays are not distinct");
  }
  if (fan.max_cones.empty()) throw NotComplete("fan has no maximal cones");
  for (const auto& cone : fan.max_cones) {
    if (cone.size() != n) throw NotSmooth("maximal cone does not have lattice_rank rays");
    for (std::size_t i : cone)
      if (i >= fan.rays.size()) throw InvalidFan("cone refers to a missing ray");
    if (abs(determinant(detail::ray_matrix(fan, cone))) != 1) throw NotSmooth("maximal cone is not smooth");
  }

  ToricPicard tp;
  tp.fan = fan;
  if (n == 2)
    tp.cyclic_order = detail::check_surface_completeness(fan);
  else
    detail::check_pseudomanifold(fan);

  const std::size_t r = fan.rays.size();
  tp.tdiv_rank = r;
  tp.m_to_tdiv = IntegerMatrix::from_rows(fan.rays);
  const auto smith = smith_form(tp.m_to_tdiv);
  for (std::size_t i = 0; i < n; ++i)
    if (smith.s(i, i) != 1) throw InvalidFan("rays do not span N, Pic would have torsion");
  tp.pic_rank = r - n;

  std::vector<std::vector<std::size_t>> cones;
  for (const auto& c : fan.max_cones) cones.push_back(detail::sorted_cone(c));
  tp.basis_cone = *std::min_element(cones.begin(), cones.end());
  for (std::size_t j = 0; j < r; ++j)
    if (!std::binary_search(tp.basis_cone.begin(), tp.basis_cone.end(), j)) tp.basis_rays.push_back(j);

  // D_i for i in the cone equals -sum_{j outside} <m_i, u_j> D_j, with m_i the dual basis.
  const IntegerMatrix dual = inverse_unimodular(detail::ray_matrix(fan, tp.basis_cone));
  tp.tdiv_to_pic = IntegerMatrix(tp.pic_rank, r);
  tp.pic_to_tdiv = IntegerMatrix(r, tp.pic_rank);
  for (std::size_t k = 0; k < tp.pic_rank; ++k) {
    tp.tdiv_to_pic(k, tp.basis_rays[k]) = 1;
    tp.pic_to_tdiv(tp.basis_rays[k], k) = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const IntVector m = dual.row(i);
    for (std::size_t k = 0; k < tp.pic_rank; ++k) {
      const IntVector& u = fan.rays[tp.basis_rays[k]];
      Integer pairing = 0;
      for (std::size_t t = 0; t < n; ++t) pairing += m[t] * u[t];
      tp.tdiv_to_pic(k, tp.basis_cone[i]) = -pairing;
    }
  }

  for (std::size_t i = 0; i < r; ++i) {
    tp.ray_classes.push_back(tp.tdiv_to_pic.column(i));
    auto it = std::find_if(tp.classes.begin(), tp.classes.end(),
                           [&](const RayClass& c) { return c.pic_class == tp.ray_classes.back(); });
    if (it == tp.classes.end())
      tp.classes.push_back({tp.ray_classes.back(), {i}});
    else
      it->rays.push_back(i);
  }
  return tp;
}

/// Permutation matrix on TDiv: e_i -> e_{perm[i]}.
inline IntegerMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  IntegerMatrix p(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) p(perm[i], i) = 1;
  return p;
}

struct NamedMatrix {
  std::string name;
  IntegerMatrix matrix;
};

struct FanSymmetries {
  LatticeGroupAction lattice_group;          // Aut of the fan inside GL(N)
  std::vector<std::string> generator_names;  // one per lattice_group.generators()
  std::vector<std::vector<std::size_t>> ray_permutations;  // per lattice element
  LatticeGroupAction pic_action;             // image in GL(Pic)
  std::vector<std::size_t> pic_image;        // per lattice element, index into pic_action
  std::size_t kernel_size = 1;

  IntegerMatrix tdiv_matrix(std::size_t element) const { return permutation_matrix(ray_permutations[element]); }
};

inline IntegerMatrix pic_matrix_of(const ToricPicard& tp, const std::vector<std::size_t>& perm) {
  return tp.tdiv_to_pic * permutation_matrix(perm) * tp.pic_to_tdiv;
}

namespace detail {

inline std::optional<std::vector<std::size_t>> ray_permutation(const ToricPicard& tp, const IntegerMatrix& g,
                                                               const std::map<IntVector, std::size_t>& ray_index,
                                                               const std::set<std::vector<std::size_t>>& cones) {
  std::vector<std::size_t> perm;
  for (const auto& u : tp.fan.rays) {
    auto it = ray_index.find(g * u);
    if (it == ray_index.end()) return std::nullopt;
    perm.push_back(it->second);
  }
  for (const auto& cone : cones) {
    std::vector<std::size_t> image;
    for (std::size_t i : cone) image.push_back(perm[i]);
    if (!cones.count(sorted_cone(image))) return std::nullopt;
  }
  return perm;
}

}  // namespace detail

/// All unimodular maps of N sending rays to rays and maximal cones to maximal
/// cones. Each is fixed by where it sends the basis cone, so the search runs
/// over maximal cones and orderings of their rays. Named generators are used
/// first and completed greedily by automatically named ones ("g1", "g2", ...).
inline FanSymmetries fan_automorphisms(const ToricPicard& tp, const std::vector<NamedMatrix>& named = {},
                                       std::size_t cap = kDefaultGroupCap) {
  const Fan& fan = tp.fan;
  const std::size_t n = fan.lattice_rank;
  std::map<IntVector, std::size_t> ray_index;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) ray_index.emplace(fan.rays[i], i);
  std::set<std::vector<std::size_t>> cones;
  for (const auto& c : fan.max_cones) cones.insert(detail::sorted_cone(c));

  const IntegerMatrix base_inverse = inverse_unimodular(detail::ray_matrix(fan, tp.basis_cone));
  std::vector<IntegerMatrix> found;
  std::set<IntegerMatrix> found_set;
  for (const auto& cone : cones) {
    std::vector<std::size_t> target = cone;
    do {
      const IntegerMatrix g = detail::ray_matrix(fan, target) * base_inverse;
      if (detail::ray_permutation(tp, g, ray_index, cones) && found_set.insert(g).second) {
        if (found.size() >= cap) throw GroupTooLarge("fan automorphism group exceeds the cap");
        found.push_back(g);
      }
    } while (std::next_permutation(target.begin(), target.end()));
  }

  std::vector<IntegerMatrix> gens;
  std::vector<std::string> names;
  for (const auto& nm : named) {
    if (!found_set.count(nm.matrix)) throw InvalidFan("named generator '" + nm.name + "' does not preserve the fan");
    gens.push_back(nm.matrix);
    names.push_back(nm.name);
  }
  LatticeGroupAction closure = generate(n, gens, cap);
  for (const auto& g : found) {
    if (closure.has(g)) continue;
    gens.push_back(g);
    names.push_back("g" + std::to_string(gens.size() - named.size()));
    closure = generate(n, gens, cap);
  }
  if (closure.order() != found.size()) throw InternalMismatch("fan symmetry closure does not match the search");

  FanSymmetries sym;
  sym.lattice_group = std::move(closure);
  sym.generator_names = std::move(names);
  for (const auto& g : sym.lattice_group.elements())
    sym.ray_permutations.push_back(*detail::ray_permutation(tp, g, ray_index, cones));

  std::vector<IntegerMatrix> pic_gens;
  for (const auto& g : sym.lattice_group.generators())
    pic_gens.push_back(pic_matrix_of(tp, *detail::ray_permutation(tp, g, ray_index, cones)));
  sym.pic_action = generate(tp.pic_rank, pic_gens, cap);
  for (const auto& perm : sym.ray_permutations) sym.pic_image.push_back(*sym.pic_action.index_of(pic_matrix_of(tp, perm)));
  sym.kernel_size = sym.lattice_group.order() / sym.pic_action.order();
  return sym;
}

/// Lattice elements whose Picard image lies in J.
inline std::vector<std::size_t> preimage(const FanSymmetries& sym, const LatticeGroupAction& j) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < sym.lattice_group.order(); ++k)
    if (j.has(sym.pic_action.element(sym.pic_image[k]))) out.push_back(k);
  return out;
}

/// TDiv^W, with W the preimage of J extended by all permutations of rays
/// inside a single linear-equivalence class.
inline Sublattice tdiv_invariants(const ToricPicard& tp, const FanSymmetries& sym, const LatticeGroupAction& j) {
  const std::size_t r = tp.tdiv_rank;
  std::vector<IntegerMatrix> actions;
  for (std::size_t k : preimage(sym, j)) actions.push_back(sym.tdiv_matrix(k));
  for (const auto& cls : tp.classes)
    for (std::size_t t = 1; t < cls.rays.size(); ++t) {
      std::vector<std::size_t> perm(r);
      for (std::size_t i = 0; i < r; ++i) perm[i] = i;
      std::swap(perm[cls.rays[0]], perm[cls.rays[t]]);
      actions.push_back(permutation_matrix(perm));
    }
  IntegerMatrix stacked(r * actions.size(), r);
  const IntegerMatrix id = IntegerMatrix::identity(r);
  for (std::size_t k = 0; k < actions.size(); ++k) {
    const IntegerMatrix d = actions[k] - id;
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) stacked(k * r + a, b) = d(a, b);
  }
  return kernel_basis(stacked);
}

/// Am^T(X, J) = Pic^J / Pic^T(X, J), computed twice: as the cokernel of
/// TDiv^W -> Pic^J and as Pic^J / <n_i * orbit_sum_J([D_i])>. The two
/// subgroups must coincide.
inline AmitsurComputation am_T(const ToricPicard& tp, const FanSymmetries& sym, const LatticeGroupAction& j) {
  if (!j.is_subgroup_of(sym.pic_action)) throw NotASubgroup("J is not a subgroup of the Picard action");
  const Sublattice invariant = fixed_lattice(j);

  std::vector<GeneratorRecord> records;
  for (std::size_t i = 0; i < tp.classes.size(); ++i) {
    const auto& cls = tp.classes[i];
    records.push_back({"class" + std::to_string(i), cls.pic_class,
                       Integer(cls.multiplicity()) * orbit_sum(j, cls.pic_class)});
  }
  std::vector<IntVector> gens;
  for (const auto& rec : records) gens.push_back(rec.vector);
  Sublattice by_orbit_sums = span(gens, tp.pic_rank);

  const Sublattice by_cokernel = image(tp.tdiv_to_pic, tdiv_invariants(tp, sym, j));
  if (!(by_cokernel == by_orbit_sums))
    throw InternalMismatch("image of TDiv^W differs from the span of n_i times orbit sums");

  FiniteAbelianGroup group = quotient(invariant, by_orbit_sums);
  return {invariant, std::move(by_orbit_sums), std::move(group), std::move(records)};
}

/// Intersection matrix of the torus-invariant divisors of a smooth complete
/// toric surface: D_i^2 = -b_i where u_{i-1} + u_{i+1} = b_i u_i, neighbours
/// meet once, everything else is 0.
inline IntegerMatrix surface_intersection(const ToricPicard& tp) {
  if (tp.fan.lattice_rank != 2) throw NotASurface("intersection matrix needs a surface fan");
  const std::size_t r = tp.tdiv_rank;
  IntegerMatrix q(r, r);
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t prev = tp.cyclic_order[(k + r - 1) % r];
    const std::size_t cur = tp.cyclic_order[k];
    const std::size_t next = tp.cyclic_order[(k + 1) % r];
    const IntVector sum = tp.fan.rays[prev] + tp.fan.rays[next];
    const IntVector& u = tp.fan.rays[cur];
    const std::size_t c = u[0] != 0 ? 0 : 1;
    const Integer b = sum[c] / u[c];
    if (!(b * u == sum)) throw InternalMismatch("wall relation failed");
    q(cur, cur) = -b;
    q(cur, next) = 1;
    q(next, cur) = 1;
  }
  return q;
}

/// Intersection pairing on Pic in the chosen basis.
inline IntegerMatrix pic_intersection(const ToricPicard& tp) {
  return tp.pic_to_tdiv.transpose() * surface_intersection(tp) * tp.pic_to_tdiv;
}

/// K_X = -(sum of all D_i) as a Pic vector.
inline IntVector canonical_class(const ToricPicard& tp) {
  IntVector minus_ones(tp.tdiv_rank, Integer(-1));
  return tp.class_of(minus_ones);
}

inline Integer dot(const IntVector& a, const IntegerMatrix& form, const IntVector& b) {
  const IntVector fb = form * b;
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * fb[i];
  return s;
}

/// chi(D) = 1 + (D.D - D.K)/2 on a smooth complete toric surface.
inline NumericalPolynomial surface_chi(const ToricPicard& tp) {
  const IntegerMatrix form = pic_intersection(tp);
  const IntVector k = canonical_class(tp);
  return from_values(tp.pic_rank, 2, [&](const IntVector& d) {
    const Integer twice = dot(d, form, d) - dot(d, form, k);
    if (floor_mod(twice, 2) != 0) throw ParityViolation("D^2 - D.K is odd");
    return Integer(1 + twice / 2);
  });
}

/// chi([D_i]) == n_i for every ray class.
inline bool amT_equals_amChi_certificate(const ToricPicard& tp, const NumericalPolynomial& chi) {
  return std::all_of(tp.classes.begin(), tp.classes.end(), [&](const RayClass& c) {
    return eval(chi, c.pic_class) == Integer(c.multiplicity());
  });
}

inline bool amT_equals_amChi_certificate(const ToricPicard& tp) {
  return amT_equals_amChi_certificate(tp, surface_chi(tp));
}

// Bundled fans.

inline Fan hirzebruch(const Integer& e) {
  if (e < 0) throw std::invalid_argument("Hirzebruch degree must be non-negative");
  return Fan{2, {{1, 0}, {0, 1}, {-1, e}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
}

inline Fan projective_plane() { return Fan{2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}}; }

/// Rays in the order E1, E2, E3, L1, L2, L3.
inline Fan dp6() {
  return Fan{2,
             {{1, 0}, {0, 1}, {-1, -1}, {-1, 0}, {0, -1}, {1, 1}},
             {{0, 5}, {5, 1}, {1, 3}, {3, 2}, {2, 4}, {4, 0}}};
}

/// (P^n)^m: factor t owns coordinates t*n .. t*n+n-1 and rays
/// e_{t,0}, ..., e_{t,n-1}, -(e_{t,0} + ... + e_{t,n-1}).
inline Fan projective_product_fan(std::size_t n, std::size_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("projective product needs n, m >= 1");
  Fan fan;
  fan.lattice_rank = n * m;
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t k = 0; k < n; ++k) {
      IntVector u(n * m);
      u[t * n + k] = 1;
      fan.rays.push_back(u);
    }
    IntVector u(n * m);
    for (std::size_t k = 0; k < n; ++k) u[t * n + k] = -1;
    fan.rays.push_back(u);
  }
  // One omitted ray per factor.
  std::vector<std::size_t> omit(m, 0);
  for (;;) {
    std::vector<std::size_t> cone;
    for (std::size_t t = 0; t < m; ++t)
      for (std::size_t k = 0; k <= n; ++k)
        if (k != omit[t]) cone.push_back(t * (n + 1) + k);
    fan.max_cones.push_back(cone);
    std::size_t t = 0;
    while (t < m && omit[t] == n) omit[t++] = 0;
    if (t == m) break;
    ++omit[t];
  }
  return fan;
}

/// A validated toric variety together with chi and the dimension.
struct ToricVariety {
  std::string name;
  ToricPicard picard;
  FanSymmetries symmetries;
  NumericalPolynomial chi;
  std::size_t dim = 0;
  bool has_chi = true;  // false for fans read from files beyond dimension 2

  VarietySpec spec(const LatticeGroupAction& j) const {
    if (!has_chi) throw NotASurface("no chi is available for " + name);
    return VarietySpec(dim, j, chi);
  }
};

inline ToricVariety toric_surface(std::string name, const Fan& fan, const std::vector<NamedMatrix>& named = {}) {
  ToricPicard tp = validate(fan);
  if (fan.lattice_rank != 2) throw NotASurface("chi is only available for surfaces and projective products");
  FanSymmetries sym = fan_automorphisms(tp, named);
  NumericalPolynomial chi = surface_chi(tp);
  return {std::move(name), std::move(tp), std::move(sym), std::move(chi), 2, true};
}

inline ToricVariety hirzebruch_variety(const Integer& e) {
  std::vector<NamedMatrix> named;
  if (e == 0) {
    named = {{"x", IntegerMatrix::from_rows({{-1, 0}, {0, 1}})},
             {"y", IntegerMatrix::from_rows({{1, 0}, {0, -1}})},
             {"swap", IntegerMatrix::from_rows({{0, 1}, {1, 0}})}};
  } else {
    named = {{"t", IntegerMatrix::from_rows(std::vector<IntVector>{{-1, 0}, {e, 1}})}};
  }
  return toric_surface("hirzebruch:" + e.str(), hirzebruch(e), named);
}

inline ToricVariety dp6_variety() {
  return toric_surface("dp6", dp6(),
                       {{"s", IntegerMatrix::from_rows({{0, 1}, {1, 0}})},
                        {"r", IntegerMatrix::from_rows({{0, 1}, {-1, 1}})}});
}

inline ToricVariety projective_plane_variety() { return toric_surface("p2", projective_plane()); }

/// (P^n)^m with chi(k_1, ..., k_m) = prod_i C(k_i + n, n) in the basis of
/// hyperplane classes; named generators "swap" (factors 1 and 2) and "cycle".
inline ToricVariety projective_product(std::size_t n, std::size_t m) {
  const Fan fan = projective_product_fan(n, m);
  ToricPicard tp = validate(fan);
  const std::size_t rank = n * m;
  auto factor_permutation = [&](const std::vector<std::size_t>& target) {
    IntegerMatrix g(rank, rank);
    for (std::size_t t = 0; t < m; ++t)
      for (std::size_t k = 0; k < n; ++k) g(target[t] * n + k, t * n + k) = 1;
    return g;
  };
  std::vector<NamedMatrix> named;
  if (m >= 2) {
    std::vector<std::size_t> swap(m);
    for (std::size_t t = 0; t < m; ++t) swap[t] = t;
    std::swap(swap[0], swap[1]);
    named.push_back({"swap", factor_permutation(swap)});
  }
  if (m >= 3) {
    std::vector<std::size_t> cycle(m);
    for (std::size_t t = 0; t < m; ++t) cycle[t] = (t + 1) % m;
    named.push_back({"cycle", factor_permutation(cycle)});
  }
  FanSymmetries sym = fan_automorphisms(tp, named);
  NumericalPolynomial chi = from_values(m, n * m, [&](const IntVector& k) {
    Integer v = 1;
    for (const auto& ki : k) v *= binomial(ki + n, n);
    return v;
  });
  return {"pproduct:" + std::to_string(n) + ":" + std::to_string(m), std::move(tp), std::move(sym), std::move(chi),
          n * m, true};
}

}  // namespace amitsur
