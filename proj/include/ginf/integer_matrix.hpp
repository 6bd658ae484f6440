#ifndef GINF_INTEGER_MATRIX_HPP
#define GINF_INTEGER_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ginf/bigint.hpp"

namespace ginf {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<BigInt>> &cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  BigInt &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<BigInt> column(std::size_t c) const;
  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

  /// "[1 2] [3 4]"
  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix power(const IntMatrix &a, std::size_t k);

/// Rank over the rationals (fraction-free elimination).
std::size_t rank(const IntMatrix &m);

/// Canonical basis of the integer column span of `m`, as the columns of an
/// n x r matrix. The basis is in echelon form by coordinate: basis vector i
/// has its first nonzero entry (the pivot, positive) at a coordinate strictly
/// after that of vector i-1, and every other basis vector has its entry at
/// that coordinate reduced into [0, pivot). Equal lattices give equal bases.
IntMatrix image_lattice(const IntMatrix &m);

/// Pivot coordinate of each basis column of a lattice from image_lattice.
std::vector<std::size_t> lattice_pivots(const IntMatrix &basis);

/// Membership of an integer vector in the span of an image_lattice basis.
bool lattice_contains(const IntMatrix &basis, std::vector<BigInt> v);

/// True iff every basis vector of `sub` lies in `super`.
bool lattice_includes(const IntMatrix &super, const IntMatrix &sub);

/// Index [super : sub] for sublattices of equal rank; 0 when the ranks
/// differ (infinite index) or `sub` is not contained in `super`.
BigInt lattice_index(const IntMatrix &super, const IntMatrix &sub);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<BigInt> smith_invariants(const IntMatrix &m);

} // namespace ginf

#endif // GINF_INTEGER_MATRIX_HPP
