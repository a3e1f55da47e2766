#pragma once

#include <optional>
#include <vector>

#include "lsg/ints.hpp"

namespace lsg {

using IntVector = std::vector<Int>;

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int &at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int &at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row i -= q * row k
  void row_sub(std::size_t i, std::size_t k, const Int &q);
  /// col j -= q * col k
  void col_sub(std::size_t j, std::size_t k, const Int &q);
  void negate_row(std::size_t i);

  bool is_diagonal() const;

  friend bool operator==(const IntMatrix &a, const IntMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix mul(const IntMatrix &a, const IntMatrix &b);
IntVector mul(const IntMatrix &a, const IntVector &x);

/// Determinant by fraction-free (Bareiss) elimination. Square input.
Int det(const IntMatrix &a);

struct Egcd {
  Int g, s, t; // g = gcd(|a|,|b|) >= 0 and s*a + t*b = g
};
Egcd egcd(const Int &a, const Int &b);

/// Inverse of a modulo m (m >= 1); requires gcd(a, m) = 1.
Int mod_inverse(const Int &a, const Int &m);

struct SmithNormalForm {
  IntMatrix u, d, v; // u * a * v = d, u and v unimodular, d diagonal with d1 | d2 | ...
};
SmithNormalForm smith_normal_form(const IntMatrix &a);

/// Solve A.x == b (mod p).  Entries of the returned solution are canonical in
/// [0, p) for finite p; over Z no canonicalization is applied.  For finite p
/// the system is solved over Z as A.x + p.y = b.
std::optional<IntVector> solve_mod(const IntMatrix &a, const IntVector &b, const Modulus &p);

/// Least lambda in [0, p) with lambda * gen == target coordinate-wise (mod p),
/// correct for composite moduli; over Z any witness integer.  Absent when
/// target is outside the cyclic subgroup generated by gen.
std::optional<Int> cyclic_membership(const IntVector &gen, const IntVector &target,
                                     const Modulus &p);

} // namespace lsg
