#pragma once

// Exact linear algebra over the prime field F_p: reduced row-echelon form,
// rank, kernel and row-space comparison. Everything is integer arithmetic
// mod p; matrices are immutable values. Empty matrices (0 rows, and even
// 0 columns) are legal and denote the zero space.

#include <cstddef>
#include <optional>
#include <vector>

#include "qss/errors.hpp"

namespace qss {

bool is_prime(int p);

// Checks 2 <= p <= 257 and primality; throws ValidationError otherwise.
void check_modulus(int p);

int mod_inverse(int a, int p);

class GfMatrix {
 public:
  GfMatrix() : p_(2), rows_(0), cols_(0) {}  // empty matrix over F_2
  GfMatrix(int p, std::size_t rows, std::size_t cols);
  GfMatrix(int p, std::size_t rows, std::size_t cols, std::vector<int> entries);

  static GfMatrix identity(int p, std::size_t n);
  static GfMatrix from_rows(int p, const std::vector<std::vector<int>>& rows,
                            std::size_t cols);

  int p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  int at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, int v);

  std::vector<int> row(std::size_t r) const;
  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const GfMatrix& other) const;

 private:
  int p_;
  std::size_t rows_, cols_;
  std::vector<int> entries_;  // row-major, each in [0, p)
};

struct RrefResult {
  GfMatrix matrix;
  std::size_t rank;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
};

RrefResult rref(const GfMatrix& m);

std::size_t rank(const GfMatrix& m);

// Rows form a basis of {x in F_p^cols : m x^T = 0}; rowcount = cols - rank(m).
GfMatrix kernel(const GfMatrix& m);

// True iff the row spaces coincide (compared via the unique RREF).
// Throws DimensionMismatch when p or the column counts differ.
bool row_space_equal(const GfMatrix& a, const GfMatrix& b);

GfMatrix transpose(const GfMatrix& m);
GfMatrix multiply(const GfMatrix& a, const GfMatrix& b);
GfMatrix vstack(const GfMatrix& a, const GfMatrix& b);

// Canonical basis of the row space: RREF with zero rows dropped.
GfMatrix row_basis(const GfMatrix& m);

// One solution x of A x = b, or nullopt when inconsistent.
std::optional<std::vector<int>> solve_linear(const GfMatrix& a,
                                             const std::vector<int>& b);

}  // namespace qss
