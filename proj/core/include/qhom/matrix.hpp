#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "qhom/field.hpp"

namespace qhom {

struct RrefResult;

// Dense matrix over F_p or Q.  Entries are kept in canonical form throughout
// (residues in [0,p) resp. reduced fractions), so operator== is semantic equality.
class Matrix {
public:
  Matrix() : field_{2}, rows_(0), cols_(0) {}
  Matrix(Field f, int rows, int cols);

  static Matrix identity(Field f, int n);
  static Matrix zero(Field f, int rows, int cols) { return Matrix(f, rows, cols); }

  Field field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // Entry access.  Integer values are reduced mod p on a finite field.
  void set(int r, int c, std::int64_t v);
  void set(int r, int c, const mpq_class& v);
  std::int64_t get_int(int r, int c) const;      // finite fields only
  mpq_class get_q(int r, int c) const;           // any field
  std::string entry_str(int r, int c) const;
  static mpq_class parse_entry(const std::string& s);

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(std::int64_t k) const;
  Matrix scaled(const mpq_class& k) const;

  Matrix transpose() const;
  Matrix block(int r0, int c0, int nr, int nc) const;
  void paste(int r0, int c0, const Matrix& m);
  static Matrix hcat(const Matrix& a, const Matrix& b);
  static Matrix vcat(const Matrix& a, const Matrix& b);
  static Matrix diag_sum(const Matrix& a, const Matrix& b);

  RrefResult rref() const;

  int rank() const;

  // Columns form the canonical basis of the null space (free variable = 1,
  // remaining free variables = 0), ordered by free column index.
  Matrix kernel_basis() const;

  // One solution x of this*x = b (free variables set to 0), or nullopt.
  std::optional<Matrix> solve(const Matrix& b) const;

  std::optional<Matrix> inverse() const;

  // Flatten row-major into a single column (used to linearize hom spaces).
  Matrix vectorize() const;
  static Matrix unvectorize(const Matrix& col, Field f, int rows, int cols);

  std::string str() const;

private:
  Field field_;
  int rows_, cols_;
  std::vector<std::int64_t> ip_;  // finite field storage
  std::vector<mpq_class> q_;      // rational storage

  std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }
  void check_same(const Matrix& o) const;
};

struct RrefResult {
  Matrix reduced;
  std::vector<int> pivots;  // pivot column indices, increasing
  int rank = 0;
};

// Solve a*x = b column by column where a is invertible-on-its-image; returns
// the unique solution if every column is consistent and the kernel is trivial.
std::optional<Matrix> solve_unique(const Matrix& a, const Matrix& b);

}  // namespace qhom
