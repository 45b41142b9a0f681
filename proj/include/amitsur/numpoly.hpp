#pragma once

// Integer-valued polynomials in the binomial basis sum_a c_a * prod_i C(x_i, a_i).
// Working in this basis keeps every coefficient in Z.

#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "amitsur/errors.hpp"
#include "amitsur/integer.hpp"
#include "amitsur/intlin.hpp"

namespace amitsur {

using Exponent = std::vector<std::size_t>;

inline std::size_t total_degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), std::size_t{0}); }

/// Lattice points of the simplex {a in N^r : sum a_i <= n}, graded; within a
/// degree the first coordinate decreases, recursively.
struct SimplexPoisedSet {
  std::size_t num_vars = 0;
  std::size_t degree = 0;
  std::vector<Exponent> points;
};

namespace detail {

inline void compositions(std::size_t vars, std::size_t total, Exponent& prefix, std::vector<Exponent>& out) {
  if (vars == 0) {
    if (total == 0) out.push_back(prefix);
    return;
  }
  if (vars == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t first = total + 1; first-- > 0;) {
    prefix.push_back(first);
    compositions(vars - 1, total - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Exponents with sum exactly `total`, in the simplex order.
inline std::vector<Exponent> simplex_shell(std::size_t num_vars, std::size_t total) {
  std::vector<Exponent> out;
  Exponent prefix;
  detail::compositions(num_vars, total, prefix, out);
  return out;
}

inline SimplexPoisedSet simplex_points(std::size_t num_vars, std::size_t degree) {
  SimplexPoisedSet set{num_vars, degree, {}};
  for (std::size_t d = 0; d <= degree; ++d) {
    auto shell = simplex_shell(num_vars, d);
    set.points.insert(set.points.end(), shell.begin(), shell.end());
    if (num_vars == 0) break;
  }
  return set;
}

inline IntVector to_vector(const Exponent& a) { return IntVector(a.begin(), a.end()); }

class NumericalPolynomial {
 public:
  NumericalPolynomial() = default;
  NumericalPolynomial(std::size_t num_vars, std::size_t degree) : num_vars_(num_vars), degree_(degree) {}

  static NumericalPolynomial constant(std::size_t num_vars, const Integer& value) {
    NumericalPolynomial f(num_vars, 0);
    f.set_coeff(Exponent(num_vars, 0), value);
    return f;
  }

  /// Univariate polynomial sum_i coeffs[i] * C(k, i).
  static NumericalPolynomial univariate(const IntVector& coeffs) {
    NumericalPolynomial f(1, coeffs.empty() ? 0 : coeffs.size() - 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) f.set_coeff({i}, coeffs[i]);
    return f;
  }

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::map<Exponent, Integer>& coeffs() const noexcept { return coeffs_; }

  Integer coeff(const Exponent& a) const {
    auto it = coeffs_.find(a);
    return it == coeffs_.end() ? Integer(0) : it->second;
  }

  void set_coeff(const Exponent& a, const Integer& value) {
    if (a.size() != num_vars_) throw DimensionMismatch("exponent length does not match variable count");
    if (total_degree(a) > degree_) throw DegreeBoundViolated("exponent exceeds the degree bound");
    if (value == 0)
      coeffs_.erase(a);
    else
      coeffs_[a] = value;
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// Equality as functions; the declared degree bound is not compared.
  friend bool operator==(const NumericalPolynomial& f, const NumericalPolynomial& g) {
    return f.num_vars_ == g.num_vars_ && f.coeffs_ == g.coeffs_;
  }

 private:
  std::size_t num_vars_ = 0;
  std::size_t degree_ = 0;
  std::map<Exponent, Integer> coeffs_;  // nonzero entries only
};

inline Integer eval(const NumericalPolynomial& f, const IntVector& x) {
  if (x.size() != f.num_vars()) throw DimensionMismatch("evaluation point has the wrong length");
  Integer total = 0;
  for (const auto& [a, c] : f.coeffs()) {
    Integer term = c;
    for (std::size_t i = 0; i < a.size() && term != 0; ++i) term *= binomial(x[i], a[i]);
    total += term;
  }
  return total;
}

using ValueFunction = std::function<Integer(const IntVector&)>;

/// Newton-Gregory interpolation on the simplex S_n: c_a = (Delta^a f)(0)
///   = sum_{b <= a} (-1)^{|a-b|} prod_i C(a_i, b_i) f(b).
/// With `verify`, the result is re-checked on the shell sum a = n + 1 and
/// DegreeBoundViolated is thrown on disagreement.
inline NumericalPolynomial from_values(std::size_t num_vars, std::size_t degree, const ValueFunction& value_fn,
                                       bool verify = false) {
  const auto simplex = simplex_points(num_vars, degree);
  std::map<Exponent, Integer> values;
  for (const auto& p : simplex.points) values.emplace(p, value_fn(to_vector(p)));

  NumericalPolynomial f(num_vars, degree);
  for (const auto& a : simplex.points) {
    Integer c = 0;
    // Enumerate b <= a componentwise.
    Exponent b(num_vars, 0);
    for (;;) {
      Integer weight = ((total_degree(a) - total_degree(b)) % 2 == 0) ? 1 : -1;
      for (std::size_t i = 0; i < num_vars; ++i) weight *= binomial(Integer(a[i]), b[i]);
      c += weight * values.at(b);
      std::size_t i = 0;
      while (i < num_vars && b[i] == a[i]) b[i++] = 0;
      if (i == num_vars) break;
      ++b[i];
    }
    f.set_coeff(a, c);
  }

  if (verify) {
    for (const auto& p : simplex_shell(num_vars, degree + 1)) {
      const IntVector x = to_vector(p);
      if (eval(f, x) != value_fn(x))
        throw DegreeBoundViolated("values are not those of a polynomial of the declared degree");
    }
  }
  return f;
}

/// g(y) = f(basis * y) for a basis with independent columns.
inline NumericalPolynomial restrict(const NumericalPolynomial& f, const IntegerMatrix& basis) {
  if (basis.rows() != f.num_vars()) throw DimensionMismatch("restriction basis has the wrong number of rows");
  if (Sublattice::from_generators(basis).rank() != basis.cols())
    throw RankDeficient("restriction basis columns are dependent");
  return from_values(basis.cols(), f.degree(), [&](const IntVector& y) { return eval(f, basis * y); });
}

inline IntVector univariate_coeffs(const NumericalPolynomial& f) {
  if (f.num_vars() != 1) throw DimensionMismatch("polynomial is not univariate");
  IntVector a(f.degree() + 1);
  for (const auto& [e, c] : f.coeffs()) a[e[0]] = c;
  return a;
}

/// gcd{f(k) : k in Z} = gcd(a_0, ..., a_n).
inline Integer gcd_values(const NumericalPolynomial& f) {
  Integer g = 0;
  for (const auto& a : univariate_coeffs(f)) g = gcd(g, a);
  return g;
}

/// Binomial-basis coefficients of k*f(k):
/// b_i = i*(a_i + a_{i-1}) for 1 <= i <= n, and b_{n+1} = (n+1)*a_n.
inline IntVector k_times_coeffs(const NumericalPolynomial& f) {
  const IntVector a = univariate_coeffs(f);
  const std::size_t n = a.size() - 1;
  IntVector b(n + 2);
  for (std::size_t i = 1; i <= n; ++i) b[i] = Integer(i) * (a[i] + a[i - 1]);
  b[n + 1] = Integer(n + 1) * a[n];
  return b;
}

/// gcd{k*f(k) : k in Z}.
inline Integer gcd_k_values(const NumericalPolynomial& f) {
  Integer g = 0;
  for (const auto& b : k_times_coeffs(f)) g = gcd(g, b);
  return g;
}

/// The congruences k(a_k + a_{k-1}) = 0 and (n+1)a_n = 0 mod m, checked one by one.
inline bool divides_gcd_k_values(const Integer& m, const NumericalPolynomial& f) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  const IntVector a = univariate_coeffs(f);
  const std::size_t n = a.size() - 1;
  for (std::size_t k = 1; k <= n; ++k)
    if (floor_mod(Integer(k) * (a[k] + a[k - 1]), m) != 0) return false;
  return floor_mod(Integer(n + 1) * a[n], m) == 0;
}

/// lcm{1, ..., n}, the exponent of the symmetric group S_n.
inline Integer lcm_upto(std::size_t n) {
  Integer l = 1;
  for (std::size_t i = 2; i <= n; ++i) l = lcm(l, Integer(i));
  return l;
}

}  // namespace amitsur
