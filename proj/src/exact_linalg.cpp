#include "roothk/exact_linalg.hpp"

#include <algorithm>
#include <utility>

namespace roothk {

namespace {

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src,
                      const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += k * m(src, c);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src,
                      const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += k * m(r, src);
}

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(nr);
  IntMatrix right = IntMatrix::identity(nc);
  const std::size_t diag_len = std::min(nr, nc);

  for (std::size_t t = 0; t < diag_len; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pr = nr, pc = nc;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j)
        if (a(i, j) != 0 &&
            (pr == nr || abs(a(i, j)) < abs(a(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == nr) break;
    a.swap_rows(t, pr);
    left.swap_rows(t, pr);
    a.swap_cols(t, pc);
    right.swap_cols(t, pc);

    bool done = false;
    while (!done) {
      done = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = -tdiv(a(i, t), a(t, t));
        add_row_multiple(a, i, t, q);
        add_row_multiple(left, i, t, q);
        if (a(i, t) != 0) {
          a.swap_rows(t, i);
          left.swap_rows(t, i);
          done = false;
        }
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = -tdiv(a(t, j), a(t, t));
        add_col_multiple(a, j, t, q);
        add_col_multiple(right, j, t, q);
        if (a(t, j) != 0) {
          a.swap_cols(t, j);
          right.swap_cols(t, j);
          done = false;
        }
      }
      if (!done) continue;
      // pivot must divide the whole trailing block
      for (std::size_t i = t + 1; i < nr && done; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            add_row_multiple(a, t, i, Integer(1));
            add_row_multiple(left, t, i, Integer(1));
            done = false;
            break;
          }
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < nc; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < nr; ++c) left(t, c) = -left(t, c);
    }
  }

  SmithForm out;
  out.diag.resize(diag_len);
  for (std::size_t i = 0; i < diag_len; ++i) out.diag[i] = a(i, i);
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t nr = a.rows(), nc = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    while (true) {
      std::size_t best = nr;
      for (std::size_t i = r; i < nr; ++i)
        if (a(i, c) != 0 && (best == nr || abs(a(i, c)) < abs(a(best, c))))
          best = i;
      if (best == nr) break;
      a.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < nr; ++i) {
        if (a(i, c) == 0) continue;
        add_row_multiple(a, i, r, Integer(-tdiv(a(i, c), a(r, c))));
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0)
      for (std::size_t j = 0; j < nc; ++j) a(r, j) = -a(r, j);
    for (std::size_t k = 0; k < r; ++k)
      add_row_multiple(a, k, r, Integer(-fdiv(a(k, c), a(r, c))));
    ++r;
  }
  IntMatrix h(r, nc);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < nc; ++j) h(i, j) = a(i, j);
  return h;
}

RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t r = 0;
  if (pivots) pivots->clear();
  Rational f;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && m(p, c) == 0) ++p;
    if (p == nr) continue;
    m.swap_rows(r, p);
    if (m(r, c) != 1) {
      Rational inv = 1 / m(r, c);
      for (std::size_t j = c; j < nc; ++j) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || m(i, c) == 0) continue;
      f = m(i, c);
      for (std::size_t j = c; j < nc; ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::size_t rank(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::size_t rank(const IntMatrix& m) {
  // fraction-free elimination
  IntMatrix a = m;
  const std::size_t nr = a.rows(), nc = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a(p, c) == 0) ++p;
    if (p == nr) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        a(i, j) = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(),
                     prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

std::vector<RatVector> rational_kernel(const RatMatrix& m) {
  std::vector<std::size_t> piv;
  RatMatrix red = rref(m, &piv);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(nc);
    v[free] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -red(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatVector> stack_and_common_kernel(std::span<const RatMatrix> ms) {
  if (ms.empty()) throw DimensionMismatch("no matrices to stack");
  const std::size_t nc = ms.front().cols();
  std::size_t total = 0;
  for (const auto& m : ms) {
    if (m.cols() != nc) throw DimensionMismatch("column counts differ");
    total += m.rows();
  }
  RatMatrix stacked(total, nc);
  std::size_t r0 = 0;
  for (const auto& m : ms) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < nc; ++j) stacked(r0 + i, j) = m(i, j);
    r0 += m.rows();
  }
  return rational_kernel(stacked);
}

Rational determinant(const RatMatrix& m) {
  if (!m.square()) throw DimensionMismatch("determinant of non-square");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw DimensionMismatch("determinant of non-square");
  IntMatrix a = m;
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        a(i, j) = a(c, c) * a(i, j) - a(i, c) * a(c, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(),
                     prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(c, c);
  }
  return sign * a(n - 1, n - 1);
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.square()) throw DimensionMismatch("inverse of non-square");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  aug = rref(std::move(aug), &piv);
  if (piv.size() < n || piv[n - 1] != n - 1)
    throw SingularGram("matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j);
  return q;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1)
        throw ConstructionError("non-integral entry " +
                                to_exact_string(m(i, j)));
      z(i, j) = m(i, j).get_num();
    }
  return z;
}

IntMatrix primitive_integral(const RatMatrix& m) {
  Integer den = 1;
  for (const auto& x : m.data()) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    den = l;
  }
  IntMatrix z(m.rows(), m.cols());
  Integer g = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational s = m(i, j) * den;
      z(i, j) = s.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z(i, j).get_mpz_t());
    }
  if (g == 0) return z;
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j)
      mpz_divexact(z(i, j).get_mpz_t(), z(i, j).get_mpz_t(), g.get_mpz_t());
  return z;
}

bool is_symmetric(const RatMatrix& m) {
  return m.square() && m == m.transpose();
}

bool is_positive_definite(const RatMatrix& m) {
  if (!is_symmetric(m)) return false;
  RatMatrix a = m;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    if (a(c, c) <= 0) return false;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return true;
}

std::string to_exact_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

IntMatrix clear_denominators(const RatMatrix& m) {
  Integer den = 1;
  for (const auto& x : m.data())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), Rational(x).get_den_mpz_t());
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = Rational(m(i, j) * den).get_num();
  return out;
}

}  // namespace roothk
