#include "ginf/integer_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ginf/error.hpp"

namespace ginf {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw InvalidStructure("ragged matrix literal");
    for (long long x : r)
      data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows,
                                  const std::vector<std::vector<BigInt>> &cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw InvalidStructure("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = cols[c][r];
  }
  return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t c) const {
  std::vector<BigInt> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols_ != b.rows_)
    throw InvalidStructure("matrix shapes " + std::to_string(a.rows_) + "x" +
                           std::to_string(a.cols_) + " and " + std::to_string(b.rows_) + "x" +
                           std::to_string(b.cols_) + " do not compose");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt &x = a(i, k);
      if (x == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        p(i, j) += x * b(k, j);
    }
  return p;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r)
      os << ' ';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c)
      os << (c ? " " : "") << (*this)(r, c);
    os << ']';
  }
  return os.str();
}

IntMatrix power(const IntMatrix &a, std::size_t k) {
  if (!a.square())
    throw InvalidStructure("power of a non-square matrix");
  IntMatrix result = IntMatrix::identity(a.rows());
  IntMatrix base = a;
  while (k) {
    if (k & 1)
      result = result * base;
    k >>= 1;
    if (k)
      base = base * base;
  }
  return result;
}

std::size_t rank(const IntMatrix &m) {
  // Bareiss-style elimination without the division step; entries may grow
  // but stay exact.
  std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      a[r][c] = m(r, c);
  std::size_t rk = 0;
  for (std::size_t c = 0; c < m.cols() && rk < m.rows(); ++c) {
    std::size_t p = rk;
    while (p < m.rows() && a[p][c] == 0)
      ++p;
    if (p == m.rows())
      continue;
    std::swap(a[p], a[rk]);
    for (std::size_t r = rk + 1; r < m.rows(); ++r) {
      if (a[r][c] == 0)
        continue;
      BigInt g = gcd(a[rk][c], a[r][c]);
      BigInt f1 = a[r][c] / g, f0 = a[rk][c] / g;
      for (std::size_t j = c; j < m.cols(); ++j)
        a[r][j] = a[r][j] * f0 - a[rk][j] * f1;
    }
    ++rk;
  }
  return rk;
}

namespace {

using Vec = std::vector<BigInt>;

BigInt floor_div(const BigInt &a, const BigInt &b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

void axpy(Vec &y, const BigInt &a, const Vec &x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    y[i] -= a * x[i];
}

} // namespace

IntMatrix image_lattice(const IntMatrix &m) {
  const std::size_t n = m.rows();
  std::vector<Vec> gens;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Vec v = m.column(c);
    if (std::any_of(v.begin(), v.end(), [](const BigInt &x) { return x != 0; }))
      gens.push_back(std::move(v));
  }

  std::size_t r = 0;
  for (std::size_t coord = 0; coord < n && r < gens.size(); ++coord) {
    // Euclid on the entries at `coord` among gens[r..].
    for (;;) {
      std::size_t best = gens.size();
      for (std::size_t i = r; i < gens.size(); ++i)
        if (gens[i][coord] != 0 && (best == gens.size() || abs(gens[i][coord]) < abs(gens[best][coord])))
          best = i;
      if (best == gens.size())
        break;
      std::swap(gens[r], gens[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < gens.size(); ++i) {
        if (gens[i][coord] == 0)
          continue;
        axpy(gens[i], floor_div(gens[i][coord], gens[r][coord]), gens[r]);
        if (gens[i][coord] != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (gens[r][coord] == 0)
      continue;
    if (gens[r][coord] < 0)
      for (auto &x : gens[r])
        x = -x;
    for (std::size_t i = 0; i < r; ++i)
      axpy(gens[i], floor_div(gens[i][coord], gens[r][coord]), gens[r]);
    ++r;
  }
  gens.resize(r);
  return IntMatrix::from_columns(n, gens);
}

std::vector<std::size_t> lattice_pivots(const IntMatrix &basis) {
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    std::size_t r = 0;
    while (r < basis.rows() && basis(r, c) == 0)
      ++r;
    piv.push_back(r);
  }
  return piv;
}

bool lattice_contains(const IntMatrix &basis, Vec v) {
  if (v.size() != basis.rows())
    throw InvalidStructure("vector length does not match the lattice dimension");
  auto piv = lattice_pivots(basis);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    const BigInt &p = basis(piv[i], i);
    if (v[piv[i]] % p != 0)
      return false;
    BigInt q = v[piv[i]] / p;
    if (q != 0)
      axpy(v, q, basis.column(i));
  }
  return std::all_of(v.begin(), v.end(), [](const BigInt &x) { return x == 0; });
}

bool lattice_includes(const IntMatrix &super, const IntMatrix &sub) {
  for (std::size_t c = 0; c < sub.cols(); ++c)
    if (!lattice_contains(super, sub.column(c)))
      return false;
  return true;
}

BigInt lattice_index(const IntMatrix &super, const IntMatrix &sub) {
  if (super.cols() != sub.cols() || !lattice_includes(super, sub))
    return 0;
  // Equal rank sublattices share pivot coordinates; the index is the ratio
  // of the pivot products (both bases are triangular on those coordinates).
  BigInt a = 1, b = 1;
  auto ps = lattice_pivots(super), pb = lattice_pivots(sub);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    a *= super(ps[i], i);
    b *= sub(pb[i], i);
  }
  return b / a;
}

std::vector<BigInt> smith_invariants(const IntMatrix &m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<Vec> a(R, Vec(C));
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c)
      a[r][c] = m(r, c);

  std::vector<BigInt> diag;
  bool exhausted = false;
  for (std::size_t t = 0; t < std::min(R, C) && !exhausted; ++t) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    for (;;) {
      std::size_t pr = R, pc = C;
      for (std::size_t r = t; r < R; ++r)
        for (std::size_t c = t; c < C; ++c)
          if (a[r][c] != 0 && (pr == R || abs(a[r][c]) < abs(a[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr == R) {
        exhausted = true;
        break;
      }
      std::swap(a[t], a[pr]);
      for (auto &row : a)
        std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t r = t + 1; r < R; ++r) {
        if (a[r][t] == 0)
          continue;
        BigInt q = floor_div(a[r][t], a[t][t]);
        for (std::size_t c = t; c < C; ++c)
          a[r][c] -= q * a[t][c];
        clean = clean && a[r][t] == 0;
      }
      for (std::size_t c = t + 1; c < C; ++c) {
        if (a[t][c] == 0)
          continue;
        BigInt q = floor_div(a[t][c], a[t][t]);
        for (std::size_t r = t; r < R; ++r)
          a[r][c] -= q * a[r][t];
        clean = clean && a[t][c] == 0;
      }
      if (!clean)
        continue;
      // Divisibility: fold any entry not divisible by the pivot into row t.
      bool divisible = true;
      for (std::size_t r = t + 1; r < R && divisible; ++r)
        for (std::size_t c = t + 1; c < C && divisible; ++c)
          if (a[r][c] % a[t][t] != 0) {
            for (std::size_t k = t; k < C; ++k)
              a[t][k] += a[r][k];
            divisible = false;
          }
      if (divisible)
        break;
    }
    if (!exhausted)
      diag.push_back(abs(a[t][t]));
  }
  return diag;
}

} // namespace ginf
