#include "lsg/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace lsg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw std::invalid_argument("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::row_sub(std::size_t i, std::size_t k, const Int &q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) -= q * at(k, c);
}

void IntMatrix::col_sub(std::size_t j, std::size_t k, const Int &q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) at(r, j) -= q * at(r, k);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && at(i, j) != 0) return false;
  return true;
}

IntMatrix mul(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mul: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int &aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntVector mul(const IntMatrix &a, const IntVector &x) {
  if (a.cols() != x.size()) throw std::invalid_argument("mul: shape mismatch");
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a.at(i, j) * x[j];
  return y;
}

Int det(const IntMatrix &a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: square matrix required");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      m.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev; // exact by Bareiss
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

Egcd egcd(const Int &a, const Int &b) {
  if (a == 0 && b == 0) return {0, 0, 0};
  // Iterative extended Euclid on (a, b); keeps g >= 0.
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Int mod_inverse(const Int &a, const Int &m) {
  if (m == 1) return 0;
  Egcd e = egcd(a, m);
  if (e.g != 1) throw std::invalid_argument("mod_inverse: not coprime");
  Int r = e.s % m;
  if (r < 0) r += m;
  return r;
}

namespace {

// Position of the entry with least nonzero absolute value in the trailing
// submatrix starting at (k, k); nullopt when that submatrix is zero.
std::optional<std::pair<std::size_t, std::size_t>> least_abs_pivot(const IntMatrix &d,
                                                                   std::size_t k) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int best_abs = 0;
  for (std::size_t i = k; i < d.rows(); ++i)
    for (std::size_t j = k; j < d.cols(); ++j) {
      const Int &x = d.at(i, j);
      if (x == 0) continue;
      Int ax = abs(x);
      if (!best || ax < best_abs) {
        best = {{i, j}};
        best_abs = ax;
      }
    }
  return best;
}

// Round-to-nearest quotient keeps remainders at most half the divisor, which
// controls entry growth during elimination.
Int nearest_quotient(const Int &a, const Int &b) {
  Int q = a / b; // truncated
  Int r = a - q * b;
  if (2 * abs(r) > abs(b)) q += (a < 0) == (b < 0) ? 1 : -1;
  return q;
}

} // namespace

SmithNormalForm smith_normal_form(const IntMatrix &a) {
  std::size_t m = a.rows(), n = a.cols();
  SmithNormalForm out{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix &u = out.u, &d = out.d, &v = out.v;

  std::size_t rank = std::min(m, n);
  for (std::size_t k = 0; k < rank; ++k) {
    for (;;) {
      auto piv = least_abs_pivot(d, k);
      if (!piv) goto done; // trailing submatrix zero; remaining diagonal is 0
      d.swap_rows(k, piv->first);
      u.swap_rows(k, piv->first);
      d.swap_cols(k, piv->second);
      v.swap_cols(k, piv->second);

      bool dirty = false;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (d.at(i, k) == 0) continue;
        Int q = nearest_quotient(d.at(i, k), d.at(k, k));
        d.row_sub(i, k, q);
        u.row_sub(i, k, q);
        if (d.at(i, k) != 0) dirty = true;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (d.at(k, j) == 0) continue;
        Int q = nearest_quotient(d.at(k, j), d.at(k, k));
        d.col_sub(j, k, q);
        v.col_sub(j, k, q);
        if (d.at(k, j) != 0) dirty = true;
      }
      if (dirty) continue; // pivot shrank; re-select

      // Divisibility: the pivot must divide the whole trailing submatrix.
      bool fixed = true;
      for (std::size_t i = k + 1; i < m && fixed; ++i)
        for (std::size_t j = k + 1; j < n && fixed; ++j)
          if (d.at(i, j) % d.at(k, k) != 0) {
            d.row_sub(k, i, Int(-1)); // fold the offending row in and redo
            u.row_sub(k, i, Int(-1));
            fixed = false;
          }
      if (fixed) break;
    }
    if (d.at(k, k) < 0) {
      d.negate_row(k);
      u.negate_row(k);
    }
  }
done:
  return out;
}

std::optional<IntVector> solve_mod(const IntMatrix &a, const IntVector &b, const Modulus &p) {
  std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw std::invalid_argument("solve_mod: dimension mismatch");

  // Over Z_p solve the integer system [A | p.I] (x, y)^T = b.
  std::size_t cols = p.is_finite() ? n + m : n;
  IntMatrix sys(m, cols);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) sys.at(i, j) = a.at(i, j);
    if (p.is_finite()) sys.at(i, n + i) = p.value();
  }

  SmithNormalForm snf = smith_normal_form(sys);
  IntVector c = mul(snf.u, b);
  IntVector w(cols);
  std::size_t rank = std::min(m, cols);
  for (std::size_t i = 0; i < m; ++i) {
    const Int di = i < rank ? snf.d.at(i, i) : Int(0);
    if (di == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % di != 0) return std::nullopt;
      w[i] = c[i] / di;
    }
  }
  IntVector z = mul(snf.v, w);
  IntVector x(z.begin(), z.begin() + n);
  for (Int &xi : x) xi = p.reduce(xi);
  return x;
}

namespace {

// Merge the congruence lambda == a2 (mod m2) into lambda == a1 (mod m1).
// Returns false when the pair is unsatisfiable.
bool merge_congruence(Int &a1, Int &m1, const Int &a2, const Int &m2) {
  Egcd e = egcd(m1, m2);
  Int diff = a2 - a1;
  if (diff % e.g != 0) return false;
  Int lcm = m1 / e.g * m2;
  // a = a1 + m1 * t with t == (diff/g) * inv(m1/g) (mod m2/g)
  Int mod2 = m2 / e.g;
  Int t = mod2 == 1 ? Int(0)
                    : ((diff / e.g) % mod2) * mod_inverse((m1 / e.g) % mod2, mod2) % mod2;
  if (t < 0) t += mod2;
  a1 = (a1 + m1 * t) % lcm;
  if (a1 < 0) a1 += lcm;
  m1 = lcm;
  return true;
}

} // namespace

std::optional<Int> cyclic_membership(const IntVector &gen, const IntVector &target,
                                     const Modulus &p) {
  if (gen.size() != target.size())
    throw std::invalid_argument("cyclic_membership: length mismatch");

  if (p.is_inf()) {
    std::optional<Int> lambda;
    for (std::size_t i = 0; i < gen.size(); ++i) {
      if (gen[i] == 0) {
        if (target[i] != 0) return std::nullopt;
        continue;
      }
      if (target[i] % gen[i] != 0) return std::nullopt;
      Int l = target[i] / gen[i];
      if (lambda && *lambda != l) return std::nullopt;
      lambda = l;
    }
    return lambda ? *lambda : Int(0);
  }

  const Int &mod = p.value();
  Int a = 0, m = 1; // running congruence lambda == a (mod m)
  for (std::size_t i = 0; i < gen.size(); ++i) {
    Int g = p.reduce(gen[i]);
    Int t = p.reduce(target[i]);
    Int d = egcd(g, mod).g; // gcd(g, p); equals p when g == 0
    if (t % d != 0) return std::nullopt;
    Int mi = mod / d;
    if (mi == 1) continue; // no constraint
    Int ai = ((t / d) % mi) * mod_inverse((g / d) % mi, mi) % mi;
    if (!merge_congruence(a, m, ai, mi)) return std::nullopt;
  }
  return a; // canonical: a in [0, m) subset [0, p)
}

} // namespace lsg
