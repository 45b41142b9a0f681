#pragma once

// Numerical Amitsur groups Am^chi(X, J) = Pic(X)^J / Pic^chi(X, J), where
// Pic^chi is generated by chi(D) * (J-orbit sum of D) over all classes D.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "amitsur/errors.hpp"
#include "amitsur/intlin.hpp"
#include "amitsur/latgroup.hpp"
#include "amitsur/numpoly.hpp"

namespace amitsur {

/// A Picard lattice Z^pic_rank with a finite group J acting on it and the
/// Euler characteristic chi as a J-invariant numerical polynomial.
class VarietySpec {
 public:
  /// Throws ChiNotInvariant (naming the generator) or DimensionMismatch.
  VarietySpec(std::size_t dim, LatticeGroupAction action, NumericalPolynomial chi)
      : dim_(dim), action_(std::move(action)), chi_(std::move(chi)) {
    if (chi_.num_vars() != action_.rank())
      throw DimensionMismatch("chi has " + std::to_string(chi_.num_vars()) + " variables but the Picard rank is " +
                              std::to_string(action_.rank()));
    for (const auto& [a, c] : chi_.coeffs())
      if (total_degree(a) > dim_) throw DegreeBoundViolated("chi has degree larger than the dimension");
    if (auto bad = first_non_invariant_generator(chi_, action_))
      throw ChiNotInvariant("chi is not invariant under action generator " + std::to_string(*bad), *bad);
  }

  std::size_t pic_rank() const noexcept { return action_.rank(); }
  std::size_t dim() const noexcept { return dim_; }
  const LatticeGroupAction& action() const noexcept { return action_; }
  const NumericalPolynomial& chi() const noexcept { return chi_; }

  /// chi(O_X) = 1 + (-1)^dim p_a.
  Integer chi_of_structure_sheaf() const { return eval(chi_, IntVector(pic_rank())); }

 private:
  std::size_t dim_;
  LatticeGroupAction action_;
  NumericalPolynomial chi_;
};

struct GeneratorRecord {
  std::string source;  // e.g. "H3" (subgroup index) or "box"
  IntVector point;
  IntVector vector;

  friend bool operator==(const GeneratorRecord&, const GeneratorRecord&) = default;
};

struct AmitsurComputation {
  Sublattice invariant_lattice;  // Pic^J
  Sublattice split_subgroup;     // Pic^chi or Pic^T, inside Pic^J
  FiniteAbelianGroup group;      // their quotient
  std::vector<GeneratorRecord> generators_used;

  friend bool operator==(const AmitsurComputation&, const AmitsurComputation&) = default;
};

/// Finite generating set of Pic^chi. For each subgroup H of J with fixed
/// lattice basis B_H (rank s) and coset-sum map sigma_H of J/H, emits
/// chi(B_H a) * sigma_H(B_H a) for every a in the simplex S_{dim+1} of Z^s.
/// The map D -> chi(D) sigma_H(D) is polynomial of degree dim+1 on Pic^H, and
/// sigma_H(D) = [Stab(D):H] * orbit_sum(D), so the union over H spans Pic^chi.
inline std::vector<GeneratorRecord> pic_chi_generators(const VarietySpec& spec) {
  std::vector<GeneratorRecord> out;
  const auto subs = subgroups(spec.action());
  const Sublattice invariant = fixed_lattice(spec.action());
  for (std::size_t k = 0; k < subs.size(); ++k) {
    const CosetSumMap sigma = coset_sum_map(spec.action(), subs[k]);
    const IntegerMatrix& basis = sigma.domain.basis();
    if (basis.cols() == 0) continue;
    for (const auto& a : simplex_points(basis.cols(), spec.dim() + 1).points) {
      const IntVector d = basis * to_vector(a);
      IntVector v = eval(spec.chi(), d) * sigma(d);
      if (!contains(invariant, v)) throw InternalMismatch("emitted generator is not J-invariant");
      out.push_back({"H" + std::to_string(k), to_vector(a), std::move(v)});
    }
  }
  return out;
}

namespace detail {

inline std::vector<IntVector> vectors_of(const std::vector<GeneratorRecord>& records) {
  std::vector<IntVector> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.vector);
  return out;
}

inline AmitsurComputation assemble(const Sublattice& invariant, std::vector<GeneratorRecord> records) {
  const std::size_t rank = invariant.ambient_rank();
  Sublattice split = span(vectors_of(records), rank);
  FiniteAbelianGroup group = quotient(invariant, split);
  return {invariant, std::move(split), std::move(group), std::move(records)};
}

/// Calls fn(point) for every point of [-radius, radius]^dims, in lexicographic order.
template <class Fn>
void for_each_box_point(std::size_t dims, const Integer& radius, Fn&& fn) {
  IntVector x(dims, -radius);
  for (;;) {
    fn(x);
    std::size_t i = dims;
    while (i > 0 && x[i - 1] == radius) x[--i] = -radius;
    if (i == 0) return;
    ++x[i - 1];
  }
}

}  // namespace detail

inline AmitsurComputation am_chi(const VarietySpec& spec) {
  return detail::assemble(fixed_lattice(spec.action()), pic_chi_generators(spec));
}

/// Oracle straight from the definition: generators chi(D) * orbit_sum(D) for
/// every D in the box [-B, B]^pic_rank.
inline AmitsurComputation am_chi_bruteforce(const VarietySpec& spec, const Integer& box_radius) {
  if (box_radius < 1) throw std::invalid_argument("box radius must be at least 1");
  std::vector<GeneratorRecord> records;
  detail::for_each_box_point(spec.pic_rank(), box_radius, [&](const IntVector& d) {
    const Integer chi = eval(spec.chi(), d);
    if (chi == 0) return;
    IntVector v = chi * orbit_sum(spec.action(), d);
    if (!is_zero(v)) records.push_back({"box", d, std::move(v)});
  });
  return detail::assemble(fixed_lattice(spec.action()), std::move(records));
}

struct OracleReport {
  AmitsurComputation poised;
  AmitsurComputation box;
  bool spans_equal = false;
  bool stabilized = false;  // box span identical at B and B+1
};

inline OracleReport oracle_check(const VarietySpec& spec, const Integer& box_radius) {
  OracleReport report{am_chi(spec), am_chi_bruteforce(spec, box_radius), false, false};
  report.spans_equal = report.poised.split_subgroup == report.box.split_subgroup;
  report.stabilized = am_chi_bruteforce(spec, box_radius + 1).split_subgroup == report.box.split_subgroup;
  return report;
}

inline void require_invariant(const VarietySpec& spec, const IntVector& v) {
  if (v.size() != spec.pic_rank()) throw DimensionMismatch("class has the wrong length");
  for (const auto& g : spec.action().elements())
    if (!(g * v == v)) throw ElementNotInvariant("class is not fixed by the group");
}

inline bool is_numerically_split(const AmitsurComputation& computation, const IntVector& v) {
  if (!contains(computation.invariant_lattice, v)) throw ElementNotInvariant("class is not fixed by the group");
  return contains(computation.split_subgroup, v);
}

inline bool is_numerically_split(const VarietySpec& spec, const IntVector& v) {
  require_invariant(spec, v);
  return is_numerically_split(am_chi(spec), v);
}

/// <chi(L) L : L in Pic^J>, with L ranging over the box [-B, B]^s in the
/// coordinates of the canonical basis of Pic^J. This is not Pic^chi in
/// general; it exists to exhibit the difference.
inline Sublattice naive_invariant_span(const VarietySpec& spec, const Integer& box_radius) {
  if (box_radius < 1) throw std::invalid_argument("box radius must be at least 1");
  const Sublattice invariant = fixed_lattice(spec.action());
  std::vector<IntVector> gens;
  detail::for_each_box_point(invariant.rank(), box_radius, [&](const IntVector& c) {
    const IntVector l = invariant.basis() * c;
    const Integer chi = eval(spec.chi(), l);
    if (chi != 0) gens.push_back(chi * l);
  });
  return span(gens, spec.pic_rank());
}

/// f(k) = chi(k v) as a univariate numerical polynomial of degree dim.
inline NumericalPolynomial chi_along(const VarietySpec& spec, const IntVector& v) {
  return from_values(1, spec.dim(), [&](const IntVector& k) { return eval(spec.chi(), k[0] * v); });
}

/// gcd{k chi(k v)}: the period of v divides it.
inline Integer period_upper_bound(const VarietySpec& spec, const IntVector& v) {
  require_invariant(spec, v);
  return gcd_k_values(chi_along(spec, v));
}

}  // namespace amitsur
