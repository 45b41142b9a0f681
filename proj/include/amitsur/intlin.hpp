#pragma once

// Exact linear algebra over Z. Sublattices are kept in Hermite form, and
// quotients come out of Smith form.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "amitsur/errors.hpp"
#include "amitsur/integer.hpp"

namespace amitsur {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntegerMatrix from_rows(const std::vector<IntVector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Columns are given explicitly so that an r x 0 matrix can be formed.
  static IntegerMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
    IntegerMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw DimensionMismatch("column length does not match row count");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  IntVector column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<IntVector> columns() const {
    std::vector<IntVector> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  IntegerMatrix transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// First `count` columns.
  IntegerMatrix leading_columns(std::size_t count) const {
    IntegerMatrix m(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, j);
    return m;
  }

  IntegerMatrix row_range(std::size_t begin, std::size_t end) const {
    IntegerMatrix m(end - begin, cols_);
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i - begin, j) = (*this)(i, j);
    return m;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_columns(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product dimension mismatch");
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend IntVector operator*(const IntegerMatrix& a, const IntVector& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector dimension mismatch");
    IntVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (v[j] != 0) out[i] += a(i, j) * v[j];
    return out;
  }

  friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
    a.require_same_shape(b);
    IntegerMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
  }

  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
    a.require_same_shape(b);
    IntegerMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }

  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Lexicographic on (rows, cols, entries); used for ordered containers.
  friend bool operator<(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
      s += "]";
    }
    return s + "]";
  }

  friend std::ostream& operator<<(std::ostream& os, const IntegerMatrix& a) { return os << a.to_string(); }

 private:
  void require_same_shape(const IntegerMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

inline IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  IntVector c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

inline IntVector operator-(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  IntVector c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

inline IntVector operator*(const Integer& k, const IntVector& v) {
  IntVector c = v;
  for (auto& x : c) x *= k;
  return c;
}

inline bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

/// Exact determinant (fraction-free Bareiss elimination).
inline Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace detail {

// new_a = x*a + y*b, new_b = z*a + w*b on columns a, b.
inline void combine_columns(IntegerMatrix& m, std::size_t a, std::size_t b, const Integer& x, const Integer& y,
                            const Integer& z, const Integer& w) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer ca = m(i, a), cb = m(i, b);
    m(i, a) = x * ca + y * cb;
    m(i, b) = z * ca + w * cb;
  }
}

inline void combine_rows(IntegerMatrix& m, std::size_t a, std::size_t b, const Integer& x, const Integer& y,
                         const Integer& z, const Integer& w) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer ra = m(a, j), rb = m(b, j);
    m(a, j) = x * ra + y * rb;
    m(b, j) = z * ra + w * rb;
  }
}

inline void axpy_column(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) += factor * m(i, src);
}

inline void negate_column(IntegerMatrix& m, std::size_t c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

/// Reduces `a` in place to canonical column Hermite form by column operations,
/// mirroring them on `u` when given. Returns the rank; columns at and beyond
/// the rank are zero afterwards.
inline std::size_t hermite_in_place(IntegerMatrix& a, IntegerMatrix* u) {
  std::size_t pivot = 0;
  for (std::size_t row = 0; row < a.rows() && pivot < a.cols(); ++row) {
    for (std::size_t c = pivot + 1; c < a.cols(); ++c) {
      if (a(row, c) == 0) continue;
      if (a(row, pivot) == 0) {
        a.swap_columns(pivot, c);
        if (u) u->swap_columns(pivot, c);
        continue;
      }
      const auto e = extended_gcd(a(row, pivot), a(row, c));
      const Integer p = a(row, pivot) / e.g;
      const Integer q = a(row, c) / e.g;
      combine_columns(a, pivot, c, e.x, e.y, -q, p);
      if (u) combine_columns(*u, pivot, c, e.x, e.y, -q, p);
    }
    if (a(row, pivot) == 0) continue;
    if (a(row, pivot) < 0) {
      negate_column(a, pivot);
      if (u) negate_column(*u, pivot);
    }
    for (std::size_t c = 0; c < pivot; ++c) {
      const Integer f = floor_div(a(row, c), a(row, pivot));
      if (f == 0) continue;
      axpy_column(a, c, pivot, -f);
      if (u) axpy_column(*u, c, pivot, -f);
    }
    ++pivot;
  }
  return pivot;
}

}  // namespace detail

struct HermiteResult {
  IntegerMatrix h;  // rows(A) x rank, canonical
  IntegerMatrix u;  // unimodular cols(A) x cols(A); A*U = [h | 0]
};

/// Canonical column Hermite form: lower-triangular echelon, positive pivots,
/// the other entries of each pivot row reduced into [0, pivot). Zero columns
/// are dropped from h.
inline HermiteResult hermite_form(const IntegerMatrix& a) {
  IntegerMatrix h = a;
  IntegerMatrix u = IntegerMatrix::identity(a.cols());
  const std::size_t rank = detail::hermite_in_place(h, &u);
  return {h.leading_columns(rank), std::move(u)};
}

struct SmithResult {
  IntegerMatrix s;
  IntegerMatrix u;
  IntegerMatrix v;  // u * A * v == s
};

inline SmithResult smith_form(const IntegerMatrix& a) {
  IntegerMatrix s = a;
  IntegerMatrix u = IntegerMatrix::identity(a.rows());
  IntegerMatrix v = IntegerMatrix::identity(a.cols());
  const std::size_t m = a.rows(), n = a.cols();

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (s(i, j) != 0 && (!best || abs(s(i, j)) < abs(s(best->first, best->second)))) best = {i, j};
      if (!best) break;
      s.swap_rows(t, best->first);
      u.swap_rows(t, best->first);
      s.swap_columns(t, best->second);
      v.swap_columns(t, best->second);

      bool clean = false;
      while (!clean) {
        clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (s(i, t) == 0) continue;
          if (s(i, t) % s(t, t) == 0) {
            const Integer f = s(i, t) / s(t, t);
            detail::combine_rows(s, i, t, 1, -f, 0, 1);
            detail::combine_rows(u, i, t, 1, -f, 0, 1);
            continue;
          }
          const auto e = extended_gcd(s(t, t), s(i, t));
          const Integer p = s(t, t) / e.g, q = s(i, t) / e.g;
          detail::combine_rows(s, t, i, e.x, e.y, -q, p);
          detail::combine_rows(u, t, i, e.x, e.y, -q, p);
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (s(t, j) == 0) continue;
          if (s(t, j) % s(t, t) == 0) {
            const Integer f = s(t, j) / s(t, t);
            detail::combine_columns(s, j, t, 1, -f, 0, 1);
            detail::combine_columns(v, j, t, 1, -f, 0, 1);
            continue;
          }
          const auto e = extended_gcd(s(t, t), s(t, j));
          const Integer p = s(t, t) / e.g, q = s(t, j) / e.g;
          detail::combine_columns(s, t, j, e.x, e.y, -q, p);
          detail::combine_columns(v, t, j, e.x, e.y, -q, p);
        }
        for (std::size_t i = t + 1; i < m && clean; ++i)
          if (s(i, t) != 0) clean = false;
      }

      // Divisibility chain: fold an offending row into the pivot row and redo.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s(i, j) % s(t, t) != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      detail::combine_rows(s, t, *offending, 1, 1, 0, 1);
      detail::combine_rows(u, t, *offending, 1, 1, 0, 1);
    }
    if (s(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) s(t, j) = -s(t, j);
      for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

/// Inverse of a matrix with determinant +-1.
inline IntegerMatrix inverse_unimodular(const IntegerMatrix& a) {
  if (a.rows() != a.cols() || abs(determinant(a)) != 1) throw NotUnimodular("matrix is not unimodular");
  // The canonical Hermite form of a unimodular matrix is the identity.
  return hermite_form(a).u;
}

/// A subgroup of Z^ambient_rank, stored by its canonical Hermite basis, so
/// equality of values is equality of subgroups.
class Sublattice {
 public:
  Sublattice() = default;

  static Sublattice zero(std::size_t ambient_rank) { return Sublattice(IntegerMatrix(ambient_rank, 0)); }
  static Sublattice full(std::size_t ambient_rank) { return Sublattice(IntegerMatrix::identity(ambient_rank)); }

  /// Subgroup generated by the columns of `generators`.
  static Sublattice from_generators(const IntegerMatrix& generators) {
    IntegerMatrix h = generators;
    const std::size_t rank = detail::hermite_in_place(h, nullptr);
    return Sublattice(h.leading_columns(rank));
  }

  std::size_t ambient_rank() const noexcept { return basis_.rows(); }
  std::size_t rank() const noexcept { return basis_.cols(); }
  const IntegerMatrix& basis() const noexcept { return basis_; }
  IntVector basis_vector(std::size_t j) const { return basis_.column(j); }

  /// Coefficients y with basis * y == v, or nullopt when v is not in the subgroup.
  std::optional<IntVector> coordinates(const IntVector& v) const {
    if (v.size() != ambient_rank()) throw DimensionMismatch("vector length does not match ambient rank");
    IntVector residual = v;
    IntVector y(rank());
    std::size_t row = 0;
    for (std::size_t j = 0; j < rank(); ++j) {
      while (basis_(row, j) == 0) {
        if (residual[row] != 0) return std::nullopt;
        ++row;
      }
      if (residual[row] % basis_(row, j) != 0) return std::nullopt;
      y[j] = residual[row] / basis_(row, j);
      if (y[j] != 0)
        for (std::size_t i = row; i < ambient_rank(); ++i) residual[i] -= y[j] * basis_(i, j);
      ++row;
    }
    for (std::size_t i = row; i < ambient_rank(); ++i)
      if (residual[i] != 0) return std::nullopt;
    return y;
  }

  friend bool operator==(const Sublattice& a, const Sublattice& b) { return a.basis_ == b.basis_; }

 private:
  explicit Sublattice(IntegerMatrix basis) : basis_(std::move(basis)) {}
  IntegerMatrix basis_;
};

/// Canonical basis of the subgroup generated by `vectors`.
inline Sublattice span(std::span<const IntVector> vectors, std::size_t ambient_rank) {
  for (const auto& v : vectors)
    if (v.size() != ambient_rank) throw DimensionMismatch("generator length does not match ambient rank");
  // Incremental reduction keeps the working matrix at most ambient_rank + chunk wide.
  const std::size_t chunk = std::max<std::size_t>(ambient_rank, 8);
  IntegerMatrix current(ambient_rank, 0);
  for (std::size_t start = 0; start < vectors.size(); start += chunk) {
    const std::size_t end = std::min(vectors.size(), start + chunk);
    IntegerMatrix work(ambient_rank, current.cols() + (end - start));
    for (std::size_t i = 0; i < ambient_rank; ++i) {
      for (std::size_t j = 0; j < current.cols(); ++j) work(i, j) = current(i, j);
      for (std::size_t k = start; k < end; ++k) work(i, current.cols() + k - start) = vectors[k][i];
    }
    const std::size_t rank = detail::hermite_in_place(work, nullptr);
    current = work.leading_columns(rank);
  }
  return Sublattice::from_generators(current);
}

inline Sublattice span(const std::vector<IntVector>& vectors, std::size_t ambient_rank) {
  return span(std::span<const IntVector>(vectors), ambient_rank);
}

inline bool contains(const Sublattice& lattice, const IntVector& v) { return lattice.coordinates(v).has_value(); }

/// Sum of two subgroups of the same ambient lattice.
inline Sublattice operator+(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw DimensionMismatch("sublattices live in different ambients");
  auto gens = a.basis().columns();
  for (auto& c : b.basis().columns()) gens.push_back(std::move(c));
  return span(gens, a.ambient_rank());
}

inline bool is_subgroup(const Sublattice& sub, const Sublattice& ambient) {
  if (sub.ambient_rank() != ambient.ambient_rank()) return false;
  for (std::size_t j = 0; j < sub.rank(); ++j)
    if (!contains(ambient, sub.basis_vector(j))) return false;
  return true;
}

/// {x : A x = 0}; saturated because it is read off a unimodular transform.
inline Sublattice kernel_basis(const IntegerMatrix& a) {
  auto [h, u] = hermite_form(a);
  std::vector<IntVector> gens;
  for (std::size_t j = h.cols(); j < u.cols(); ++j) gens.push_back(u.column(j));
  return span(gens, a.cols());
}

/// Image of a sublattice under a linear map.
inline Sublattice image(const IntegerMatrix& map, const Sublattice& domain) {
  return Sublattice::from_generators(map * domain.basis());
}

/// Invariant factors d_1 | d_2 | ... (each >= 2) plus a free rank.
struct FiniteAbelianGroup {
  std::vector<Integer> invariant_factors;
  std::size_t free_rank = 0;

  bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }
  bool is_finite() const { return free_rank == 0; }

  /// nullopt when the group is infinite.
  std::optional<Integer> order() const {
    if (!is_finite()) return std::nullopt;
    Integer o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
  }

  /// Number of elements x with d*x == 0 (finite groups only).
  Integer count_killed_by(const Integer& d) const {
    Integer count = 1;
    for (const auto& f : invariant_factors) count *= gcd(d, f);
    return count;
  }

  /// "0", "Z/3Z", "(Z/2Z)^2", "Z/2Z x Z/6Z", "Z^2", ...
  std::string to_string() const {
    if (is_trivial()) return "0";
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < invariant_factors.size();) {
      std::size_t j = i;
      while (j < invariant_factors.size() && invariant_factors[j] == invariant_factors[i]) ++j;
      const std::string cyclic = "Z/" + invariant_factors[i].str() + "Z";
      parts.push_back(j - i == 1 ? cyclic : "(" + cyclic + ")^" + std::to_string(j - i));
      i = j;
    }
    if (free_rank == 1) parts.push_back("Z");
    if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " x " : "") + parts[i];
    return out;
  }

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
};

namespace detail {

inline IntegerMatrix coordinates_of(const Sublattice& ambient, const Sublattice& sub) {
  if (ambient.ambient_rank() != sub.ambient_rank())
    throw DimensionMismatch("sublattices live in different ambients");
  IntegerMatrix coords(ambient.rank(), sub.rank());
  for (std::size_t j = 0; j < sub.rank(); ++j) {
    auto y = ambient.coordinates(sub.basis_vector(j));
    if (!y) throw SubgroupNotContained("subgroup is not contained in the ambient lattice");
    for (std::size_t i = 0; i < ambient.rank(); ++i) coords(i, j) = (*y)[i];
  }
  return coords;
}

}  // namespace detail

/// ambient / sub via the Smith form of sub written in ambient coordinates.
inline FiniteAbelianGroup quotient(const Sublattice& ambient, const Sublattice& sub) {
  const IntegerMatrix coords = detail::coordinates_of(ambient, sub);
  const SmithResult smith = smith_form(coords);
  FiniteAbelianGroup group;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < std::min(coords.rows(), coords.cols()); ++i) {
    if (smith.s(i, i) == 0) continue;
    ++nonzero;
    if (smith.s(i, i) != 1) group.invariant_factors.push_back(smith.s(i, i));
  }
  group.free_rank = ambient.rank() - nonzero;
  return group;
}

/// Least k >= 1 with k*v in sub; nullopt means infinite order.
inline std::optional<Integer> element_order_in_quotient(const Sublattice& ambient, const Sublattice& sub,
                                                        const IntVector& v) {
  const IntegerMatrix coords = detail::coordinates_of(ambient, sub);
  const auto c = ambient.coordinates(v);
  if (!c) throw ElementNotInAmbient("element is not in the ambient lattice");
  const SmithResult smith = smith_form(coords);
  const IntVector w = smith.u * *c;
  Integer order = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool has_pivot = i < coords.cols() && smith.s(i, i) != 0;
    if (!has_pivot) {
      if (w[i] != 0) return std::nullopt;
      continue;
    }
    const Integer& d = smith.s(i, i);
    order = lcm(order, d / gcd(d, w[i]));
  }
  return order;
}

}  // namespace amitsur
