#include "typespace/smith.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace typespace {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("IntMatrix: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

struct Work {
  IntMatrix D, U, V;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < D.cols(); ++j) std::swap(D(a, j), D(b, j));
    for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(a, j), U(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < D.rows(); ++i) std::swap(D(i, a), D(i, b));
    for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V(i, a), V(i, b));
  }
  // row a += q * row b
  void add_row(std::size_t a, std::size_t b, const BigInt& q) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(a, j) += q * D(b, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(a, j) += q * U(b, j);
  }
  // col a += q * col b
  void add_col(std::size_t a, std::size_t b, const BigInt& q) {
    for (std::size_t i = 0; i < D.rows(); ++i) D(i, a) += q * D(i, b);
    for (std::size_t i = 0; i < V.rows(); ++i) V(i, a) += q * V(i, b);
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(a, j) = -D(a, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(a, j) = -U(a, j);
  }
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& A) {
  Work w{A, IntMatrix::identity(A.rows()), IntMatrix::identity(A.cols())};
  const std::size_t R = A.rows();
  const std::size_t C = A.cols();
  std::size_t t = 0;
  for (; t < R && t < C; ++t) {
    for (;;) {
      // Smallest nonzero entry of the remaining block as pivot; its size
      // drops on every pass that does not finish the step.
      std::size_t pi = R;
      std::size_t pj = C;
      for (std::size_t i = t; i < R; ++i) {
        for (std::size_t j = t; j < C; ++j) {
          if (w.D(i, j) != 0 && (pi == R || abs(w.D(i, j)) < abs(w.D(pi, pj)))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == R) break;
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (w.D(i, t) == 0) continue;
        w.add_row(i, t, -(w.D(i, t) / w.D(t, t)));
        clean = clean && w.D(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (w.D(t, j) == 0) continue;
        w.add_col(j, t, -(w.D(t, j) / w.D(t, t)));
        clean = clean && w.D(t, j) == 0;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into the pivot row and redo.
      std::size_t bad = R;
      for (std::size_t i = t + 1; i < R && bad == R; ++i) {
        for (std::size_t j = t + 1; j < C; ++j) {
          if (w.D(i, j) % w.D(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == R) break;
      w.add_row(t, bad, 1);
    }
    if (w.D(t, t) == 0) break;
    if (w.D(t, t) < 0) w.negate_row(t);
  }
  SNFResult r;
  r.rank = t;
  for (std::size_t i = 0; i < R && i < C; ++i) r.diagonal.push_back(w.D(i, i));
  r.D = std::move(w.D);
  r.U = std::move(w.U);
  r.V = std::move(w.V);
  return r;
}

}  // namespace typespace
