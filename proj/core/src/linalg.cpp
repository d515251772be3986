#include "toricres/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace toricres {

std::vector<Integer> SmithResult::invariants() const {
  int k = std::min(D.rows(), D.cols());
  std::vector<Integer> d(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) d[i] = D(i, i);
  return d;
}

SmithResult smith_normal_form(const IntMatrix& A) {
  const int m = A.rows();
  const int n = A.cols();
  SmithResult r{IntMatrix::identity(m), A, IntMatrix::identity(n)};
  IntMatrix& U = r.U;
  IntMatrix& D = r.D;
  IntMatrix& V = r.V;

  auto row_sub = [&](int dst, int src, const Integer& q) {
    for (int k = 0; k < n; ++k) D(dst, k) -= q * D(src, k);
    for (int k = 0; k < m; ++k) U(dst, k) -= q * U(src, k);
  };
  auto row_add = [&](int dst, int src) {
    for (int k = 0; k < n; ++k) D(dst, k) += D(src, k);
    for (int k = 0; k < m; ++k) U(dst, k) += U(src, k);
  };
  auto col_sub = [&](int dst, int src, const Integer& q) {
    for (int k = 0; k < m; ++k) D(k, dst) -= q * D(k, src);
    for (int k = 0; k < n; ++k) V(k, dst) -= q * V(k, src);
  };
  auto swap_rows = [&](int i, int j) {
    D.swap_rows(i, j);
    U.swap_rows(i, j);
  };
  auto swap_cols = [&](int i, int j) {
    D.swap_cols(i, j);
    V.swap_cols(i, j);
  };
  auto negate_row = [&](int i) {
    for (int k = 0; k < n; ++k) D(i, k) = -D(i, k);
    for (int k = 0; k < m; ++k) U(i, k) = -U(i, k);
  };

  const int lim = std::min(m, n);
  for (int t = 0; t < lim; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    int pi = -1, pj = -1;
    Integer best;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (D(i, j) != 0) {
          Integer a = abs(D(i, j));
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      do {
        clean = true;
        if (D(t, t) < 0) negate_row(t);
        for (int i = t + 1; i < m; ++i) {
          if (D(i, t) == 0) continue;
          Integer q = floor_div(D(i, t), D(t, t));
          if (q != 0) row_sub(i, t, q);
          if (D(i, t) != 0) {
            // Remainder is a strictly smaller pivot candidate.
            swap_rows(t, i);
            clean = false;
            break;
          }
        }
        if (!clean) continue;
        for (int j = t + 1; j < n; ++j) {
          if (D(t, j) == 0) continue;
          Integer q = floor_div(D(t, j), D(t, t));
          if (q != 0) col_sub(j, t, q);
          if (D(t, j) != 0) {
            swap_cols(t, j);
            clean = false;
            break;
          }
        }
      } while (!clean);

      // Pivot must divide every remaining entry for the divisor chain.
      bool divides_all = true;
      for (int i = t + 1; i < m && divides_all; ++i)
        for (int j = t + 1; j < n && divides_all; ++j)
          if (D(i, j) % D(t, t) != 0) {
            row_add(t, i);
            divides_all = false;
          }
      if (divides_all) break;
    }
  }
  return r;
}

Integer bareiss_det(const IntMatrix& M) {
  if (!M.is_square()) throw DimensionError("determinant of a non-square matrix");
  const int n = M.rows();
  if (n == 0) return Integer(1);
  IntMatrix W = M;
  Integer prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (W(i, k) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Integer(0);
    if (pivot != k) {
      W.swap_rows(pivot, k);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer t = W(i, j) * W(k, k) - W(i, k) * W(k, j);
        mpz_divexact(W(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      W(i, k) = 0;
    }
    prev = W(k, k);
  }
  Integer det = W(n - 1, n - 1);
  return sign < 0 ? Integer(-det) : det;
}

Rational bareiss_det(const RatMatrix& M) {
  if (!M.is_square()) throw DimensionError("determinant of a non-square matrix");
  const int n = M.rows();
  if (n == 0) return Rational(1);
  // Lift each row to integers; divide the integer determinant by the scales.
  IntMatrix W(n, n);
  Integer scale(1);
  for (int i = 0; i < n; ++i) {
    Integer l(1);
    for (int j = 0; j < n; ++j) l = lcm(l, Integer(M(i, j).get_den()));
    for (int j = 0; j < n; ++j) {
      Integer f;
      mpz_divexact(f.get_mpz_t(), l.get_mpz_t(), M(i, j).get_den().get_mpz_t());
      W(i, j) = M(i, j).get_num() * f;
    }
    scale *= l;
  }
  return make_rational(bareiss_det(W), scale);
}

RankProfile rank_profile(const RatMatrix& M) {
  std::vector<int> order(static_cast<std::size_t>(M.rows()));
  std::iota(order.begin(), order.end(), 0);
  return rank_profile(M, order);
}

RankProfile rank_profile(const RatMatrix& M, const std::vector<int>& row_order) {
  RatMatrix W = M;
  RankProfile out;
  std::vector<char> used(static_cast<std::size_t>(M.rows()), 0);
  for (int c = 0; c < M.cols(); ++c) {
    int pivot = -1;
    for (int r : row_order) {
      if (!used[static_cast<std::size_t>(r)] && W(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    used[static_cast<std::size_t>(pivot)] = 1;
    out.row_indices.push_back(pivot);
    out.col_indices.push_back(c);
    ++out.rank;
    for (int r : row_order) {
      if (used[static_cast<std::size_t>(r)] || W(r, c) == 0) continue;
      Rational f = W(r, c) / W(pivot, c);
      for (int j = c; j < M.cols(); ++j) W(r, j) -= f * W(pivot, j);
    }
  }
  return out;
}

int rank_of(const RatMatrix& M) { return rank_profile(M).rank; }

std::optional<std::vector<Rational>> solve_square(const RatMatrix& A,
                                                  const std::vector<Rational>& b) {
  if (!A.is_square()) throw DimensionError("solve_square needs a square matrix");
  const int n = A.rows();
  if (static_cast<int>(b.size()) != n) throw DimensionError("solve_square: rhs length mismatch");
  RatMatrix W(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) W(i, j) = A(i, j);
    W(i, n) = b[static_cast<std::size_t>(i)];
  }
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (W(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    W.swap_rows(pivot, c);
    for (int r = c + 1; r < n; ++r) {
      if (W(r, c) == 0) continue;
      Rational f = W(r, c) / W(c, c);
      for (int j = c; j <= n; ++j) W(r, j) -= f * W(c, j);
    }
  }
  std::vector<Rational> x(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    Rational s = W(i, n);
    for (int j = i + 1; j < n; ++j) s -= W(i, j) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = s / W(i, i);
  }
  return x;
}

std::vector<std::vector<Rational>> nullspace(const RatMatrix& A) {
  const int m = A.rows();
  const int n = A.cols();
  RatMatrix W = A;
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int c = 0; c < n && row < m; ++c) {
    int pivot = -1;
    for (int r = row; r < m; ++r)
      if (W(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    W.swap_rows(pivot, row);
    Rational p = W(row, c);
    for (int j = c; j < n; ++j) W(row, j) /= p;
    for (int r = 0; r < m; ++r) {
      if (r == row || W(r, c) == 0) continue;
      Rational f = W(r, c);
      for (int j = c; j < n; ++j) W(r, j) -= f * W(row, j);
    }
    pivot_col_of_row.push_back(c);
    ++row;
  }
  std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
  for (int c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<std::vector<Rational>> basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(c)] = Rational(1);
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
      v[static_cast<std::size_t>(pivot_col_of_row[r])] = -W(static_cast<int>(r), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool fourier_motzkin_feasible(const RatMatrix& A, const std::vector<Rational>& rhs) {
  if (static_cast<int>(rhs.size()) != A.rows())
    throw DimensionError("fourier_motzkin: rhs length mismatch");
  struct Row {
    std::vector<Rational> c;
    Rational r;
  };
  const int n = A.cols();
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(A.rows()));
  for (int i = 0; i < A.rows(); ++i) {
    Row row;
    row.c.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) row.c[static_cast<std::size_t>(j)] = A(i, j);
    row.r = rhs[static_cast<std::size_t>(i)];
    rows.push_back(std::move(row));
  }
  for (int v = 0; v < n; ++v) {
    std::vector<Row> pos, neg, zer;
    for (auto& row : rows) {
      int s = sign(row.c[static_cast<std::size_t>(v)]);
      if (s > 0)
        pos.push_back(std::move(row));
      else if (s < 0)
        neg.push_back(std::move(row));
      else
        zer.push_back(std::move(row));
    }
    std::vector<Row> next = std::move(zer);
    if (!pos.empty() && !neg.empty()) {
      for (const auto& p : pos)
        for (const auto& q : neg) {
          Rational a = p.c[static_cast<std::size_t>(v)];
          Rational b = -q.c[static_cast<std::size_t>(v)];  // b > 0
          Row combined;
          combined.c.resize(static_cast<std::size_t>(n));
          for (int j = 0; j < n; ++j)
            combined.c[static_cast<std::size_t>(j)] =
                b * p.c[static_cast<std::size_t>(j)] + a * q.c[static_cast<std::size_t>(j)];
          combined.r = b * p.r + a * q.r;
          next.push_back(std::move(combined));
        }
    }
    rows = std::move(next);
  }
  for (const auto& row : rows)
    if (row.r > 0) return false;
  return true;
}

}  // namespace toricres
