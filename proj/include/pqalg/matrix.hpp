#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "pqalg/polynomial.hpp"
#include "pqalg/rational.hpp"

namespace pqalg {

// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Rational>& data() const { return data_; }

  RationalMatrix transpose() const;
  RationalMatrix pow(unsigned k) const;
  RationalMatrix column(std::size_t c) const;
  Rational max_abs_entry() const;

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rational& c);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator-(RationalMatrix a) { return a *= Rational(-1); }
  friend RationalMatrix operator*(const Rational& c, RationalMatrix a) { return a *= c; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix block_diagonal(const std::vector<RationalMatrix>& blocks);

struct RowEchelon {
  RationalMatrix reduced;           // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

RowEchelon rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

// m = left * right with left = m restricted to pivot columns and right the
// nonzero rows of rref(m).
struct RankFactorization {
  RationalMatrix left;
  RationalMatrix right;
};
RankFactorization rank_factorization(const RationalMatrix& m);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);
RationalMatrix nullspace(const RationalMatrix& m);  // basis vectors as columns
Rational trace(const RationalMatrix& m);
Polynomial characteristic_polynomial(const RationalMatrix& m);

// Rank of a family of equally sized matrices viewed as vectors.
std::size_t span_rank(const std::vector<RationalMatrix>& family);

}  // namespace pqalg
