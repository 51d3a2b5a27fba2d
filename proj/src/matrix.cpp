#include "pqalg/matrix.hpp"

#include <utility>

#include "pqalg/error.hpp"

namespace pqalg {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ParameterError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Rational>> v;
  for (const auto& row : rows) {
    std::vector<Rational> vr;
    for (long x : row) vr.emplace_back(x);
    v.push_back(std::move(vr));
  }
  return from_rows(v);
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!pqalg::is_zero(x)) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::pow(unsigned k) const {
  if (!is_square()) throw PreconditionViolation("power of a non-square matrix");
  RationalMatrix result = identity(rows_);
  RationalMatrix base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

RationalMatrix RationalMatrix::column(std::size_t c) const {
  RationalMatrix v(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
  return v;
}

Rational RationalMatrix::max_abs_entry() const {
  Rational best = 0;
  for (const auto& x : data_)
    if (abs(x) > best) best = abs(x);
  return best;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionViolation("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionViolation("matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionViolation("matrix shape mismatch in *");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (!is_zero(bkj)) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

std::string RationalMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += pqalg::to_string((*this)(r, c));
    }
    out += "]";
  }
  return out + "]";
}

RationalMatrix block_diagonal(const std::vector<RationalMatrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  RationalMatrix out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

namespace {

void swap_rows(RationalMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

RowEchelon rref(const RationalMatrix& input) {
  RowEchelon out{input, {}};
  RationalMatrix& m = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) swap_rows(m, piv, row);
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!is_zero(m(row, c))) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const RationalMatrix& input) {
  RationalMatrix m = input;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) swap_rows(m, piv, row);
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (is_zero(m(r, col))) continue;
      Rational f = m(r, col) / m(row, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!is_zero(m(row, c))) m(r, c) -= f * m(row, c);
    }
    ++row;
  }
  return row;
}

RankFactorization rank_factorization(const RationalMatrix& m) {
  RowEchelon e = rref(m);
  std::size_t r = e.pivots.size();
  RankFactorization f{RationalMatrix(m.rows(), r), RationalMatrix(r, m.cols())};
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) f.left(i, j) = m(i, e.pivots[j]);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) f.right(i, c) = e.reduced(i, c);
  return f;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw PreconditionViolation("inverse of a non-square matrix");
  std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon e = rref(aug);
  if (n > 0 && (e.pivots.size() < n || e.pivots[n - 1] != n - 1)) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

RationalMatrix nullspace(const RationalMatrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RationalMatrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) basis(e.pivots[i], k) = -e.reduced(i, free_cols[k]);
  }
  return basis;
}

Rational trace(const RationalMatrix& m) {
  if (!m.is_square()) throw PreconditionViolation("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Polynomial characteristic_polynomial(const RationalMatrix& input) {
  if (!input.is_square()) throw PreconditionViolation("characteristic polynomial of a non-square matrix");
  std::size_t n = input.rows();
  RationalMatrix h = input;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t piv = col + 1;
    while (piv < n && is_zero(h(piv, col))) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      swap_rows(h, piv, col + 1);
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, col + 1));
    }
    for (std::size_t r = col + 2; r < n; ++r) {
      if (is_zero(h(r, col))) continue;
      Rational u = h(r, col) / h(col + 1, col);
      for (std::size_t c = 0; c < n; ++c)
        if (!is_zero(h(col + 1, c))) h(r, c) -= u * h(col + 1, c);
      for (std::size_t rr = 0; rr < n; ++rr)
        if (!is_zero(h(rr, r))) h(rr, col + 1) += u * h(rr, r);
    }
  }
  std::vector<Polynomial> p(n + 1);
  p[0] = Polynomial::constant(1);
  const Polynomial t = Polynomial::monomial(1, 1);
  for (std::size_t k = 0; k < n; ++k) {
    p[k + 1] = (t - Polynomial::constant(h(k, k))) * p[k];
    Rational prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod *= h(i + 1, i);
      if (is_zero(prod)) break;
      if (!is_zero(h(i, k))) p[k + 1] -= Rational(h(i, k) * prod) * p[i];
    }
  }
  return p[n];
}

std::size_t span_rank(const std::vector<RationalMatrix>& family) {
  if (family.empty()) return 0;
  std::size_t len = family.front().rows() * family.front().cols();
  RationalMatrix m(family.size(), len);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].data().size() != len) throw PreconditionViolation("span_rank shape mismatch");
    for (std::size_t j = 0; j < len; ++j) m(i, j) = family[i].data()[j];
  }
  return rank(m);
}

}  // namespace pqalg
