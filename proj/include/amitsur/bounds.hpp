#pragma once

// Divisibility bounds on Amitsur periods from chi alone.

#include <cstddef>
#include <optional>
#include <set>

#include "amitsur/errors.hpp"
#include "amitsur/integer.hpp"
#include "amitsur/numpoly.hpp"

namespace amitsur {

/// |(1 + (-1)^n p_a) * lcm{1..n+1}|; 0 means the bound is vacuous.
inline Integer uniform_bound(std::size_t dim, const Integer& arithmetic_genus) {
  if (dim < 1) throw std::invalid_argument("dimension must be at least 1");
  const Integer chi_o = (dim % 2 == 0) ? Integer(1 + arithmetic_genus) : Integer(1 - arithmetic_genus);
  return abs(chi_o * lcm_upto(dim + 1));
}

struct CurveGcds {
  Integer gcd_f;                 // gcd{(1 - p_a), deg D}
  Integer gcd_kf;                // gcd{deg D + (1 - p_a), 2 deg D}
  std::optional<Integer> ratio;  // gcd_kf / gcd_f, absent when chi(kD) vanishes identically
  bool vacuous() const { return gcd_f == 0; }
};

/// Closed forms for a curve, where chi(kD) = deg(D) k + (1 - p_a).
/// When gcd_f is odd the ratio is 2 exactly if 1 - p_a and deg D have the
/// same parity; in general it is 2 exactly if both are odd after dividing out
/// gcd_f.
inline CurveGcds curve_gcds(const Integer& degree, const Integer& arithmetic_genus) {
  const Integer a0 = 1 - arithmetic_genus;
  CurveGcds out{gcd(a0, degree), gcd(degree + a0, 2 * degree), std::nullopt};
  if (out.gcd_f != 0) out.ratio = out.gcd_kf / out.gcd_f;
  return out;
}

/// Periods m | 6 of a class D on a surface with p_a = 0 not ruled out by:
/// 2 | m needs D^2, D.K even and D^2 != D.K mod 4; 3 | m needs D.K = 0 and
/// D^2 = 1 mod 3. Necessary conditions only.
inline std::set<Integer> surface_period_candidates(const Integer& d_squared, const Integer& d_dot_k) {
  if (floor_mod(d_squared - d_dot_k, 2) != 0) throw ParityViolation("D^2 - D.K must be even on a smooth surface");
  const bool two_ok = floor_mod(d_squared, 2) == 0 && floor_mod(d_dot_k, 2) == 0 &&
                      floor_mod(d_squared, 4) != floor_mod(d_dot_k, 4);
  const bool three_ok = floor_mod(d_dot_k, 3) == 0 && floor_mod(d_squared, 3) == 1;
  std::set<Integer> out{1};
  if (two_ok) out.insert(2);
  if (three_ok) out.insert(3);
  if (two_ok && three_ok) out.insert(6);
  return out;
}

/// Divisors m of 12 with 2 D^3 = 6 (mod m) and D^2.K = 4 (mod 2m), for a
/// threefold with p_a = 0.
inline std::set<Integer> threefold_period_candidates(const Integer& d_cubed, const Integer& d2_dot_k) {
  std::set<Integer> out;
  for (int m : {1, 2, 3, 4, 6, 12})
    if (floor_mod(2 * d_cubed - 6, m) == 0 && floor_mod(d2_dot_k - 4, 2 * m) == 0) out.insert(m);
  return out;
}

}  // namespace amitsur
