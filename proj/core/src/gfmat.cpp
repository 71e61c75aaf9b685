#include "qss/gfmat.hpp"

#include <algorithm>
#include <string>

namespace qss {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void check_modulus(int p) {
  if (p < 2 || p > 257 || !is_prime(p)) {
    throw ValidationError("modulus must be a prime in [2, 257], got " +
                          std::to_string(p));
  }
}

int mod_inverse(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw ValidationError("zero has no inverse mod " + std::to_string(p));
  // extended Euclid
  int t = 0, new_t = 1;
  int r = p, new_r = a;
  while (new_r != 0) {
    int q = r / new_r;
    int tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return t;
}

GfMatrix::GfMatrix(int p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
  check_modulus(p);
}

GfMatrix::GfMatrix(int p, std::size_t rows, std::size_t cols,
                   std::vector<int> entries)
    : p_(p), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  check_modulus(p);
  if (entries_.size() != rows * cols) {
    throw DimensionMismatch("entry count does not match matrix shape");
  }
  for (int& e : entries_) {
    e %= p_;
    if (e < 0) e += p_;
  }
}

GfMatrix GfMatrix::identity(int p, std::size_t n) {
  GfMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

GfMatrix GfMatrix::from_rows(int p, const std::vector<std::vector<int>>& rows,
                             std::size_t cols) {
  std::vector<int> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw DimensionMismatch("row length does not match column count");
    }
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return GfMatrix(p, rows.size(), cols, std::move(flat));
}

void GfMatrix::set(std::size_t r, std::size_t c, int v) {
  v %= p_;
  if (v < 0) v += p_;
  entries_[r * cols_ + c] = v;
}

std::vector<int> GfMatrix::row(std::size_t r) const {
  return std::vector<int>(entries_.begin() + r * cols_,
                          entries_.begin() + (r + 1) * cols_);
}

bool GfMatrix::operator==(const GfMatrix& other) const {
  return p_ == other.p_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         entries_ == other.entries_;
}

RrefResult rref(const GfMatrix& m) {
  const int p = m.p();
  GfMatrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < r.cols() && lead < r.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < r.rows() && r.at(pivot, c) == 0) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != lead) {
      for (std::size_t j = 0; j < r.cols(); ++j) {
        int tmp = r.at(lead, j);
        r.set(lead, j, r.at(pivot, j));
        r.set(pivot, j, tmp);
      }
    }
    const int inv = mod_inverse(r.at(lead, c), p);
    for (std::size_t j = 0; j < r.cols(); ++j) {
      r.set(lead, j, r.at(lead, j) * inv % p);
    }
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead) continue;
      const int f = r.at(i, c);
      if (f == 0) continue;
      for (std::size_t j = 0; j < r.cols(); ++j) {
        r.set(i, j, r.at(i, j) - f * r.at(lead, j));
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return RrefResult{std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const GfMatrix& m) { return rref(m).rank; }

GfMatrix kernel(const GfMatrix& m) {
  const RrefResult rr = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;

  GfMatrix out(m.p(), n - rr.rank, n);
  std::size_t next = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    out.set(next, f, 1);
    for (std::size_t i = 0; i < rr.rank; ++i) {
      out.set(next, rr.pivots[i], -rr.matrix.at(i, f));
    }
    ++next;
  }
  return out;
}

bool row_space_equal(const GfMatrix& a, const GfMatrix& b) {
  if (a.p() != b.p()) throw DimensionMismatch("row_space_equal: p mismatch");
  if (a.cols() != b.cols()) {
    throw DimensionMismatch("row_space_equal: column count mismatch");
  }
  const RrefResult ra = rref(a);
  const RrefResult rb = rref(b);
  if (ra.rank != rb.rank) return false;
  for (std::size_t i = 0; i < ra.rank; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (ra.matrix.at(i, j) != rb.matrix.at(i, j)) return false;
    }
  }
  return true;
}

GfMatrix transpose(const GfMatrix& m) {
  GfMatrix t(m.p(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t.set(j, i, m.at(i, j));
  }
  return t;
}

GfMatrix multiply(const GfMatrix& a, const GfMatrix& b) {
  if (a.p() != b.p()) throw DimensionMismatch("multiply: p mismatch");
  if (a.cols() != b.rows()) throw DimensionMismatch("multiply: shape mismatch");
  const int p = a.p();
  GfMatrix c(p, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const int f = a.at(i, k);
      if (f == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c.set(i, j, c.at(i, j) + f * b.at(k, j));
      }
    }
  }
  return c;
}

GfMatrix vstack(const GfMatrix& a, const GfMatrix& b) {
  if (a.p() != b.p()) throw DimensionMismatch("vstack: p mismatch");
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column mismatch");
  std::vector<int> flat = a.entries();
  flat.insert(flat.end(), b.entries().begin(), b.entries().end());
  return GfMatrix(a.p(), a.rows() + b.rows(), a.cols(), std::move(flat));
}

GfMatrix row_basis(const GfMatrix& m) {
  const RrefResult rr = rref(m);
  std::vector<int> flat;
  flat.reserve(rr.rank * m.cols());
  for (std::size_t i = 0; i < rr.rank; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) flat.push_back(rr.matrix.at(i, j));
  }
  return GfMatrix(m.p(), rr.rank, m.cols(), std::move(flat));
}

std::optional<std::vector<int>> solve_linear(const GfMatrix& a,
                                             const std::vector<int>& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve_linear: rhs length");
  // RREF of the augmented matrix [a | b]; inconsistent iff a pivot lands in
  // the last column.
  GfMatrix aug(a.p(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.set(i, j, a.at(i, j));
    aug.set(i, a.cols(), b[i]);
  }
  const RrefResult rr = rref(aug);
  for (std::size_t c : rr.pivots) {
    if (c == a.cols()) return std::nullopt;
  }
  std::vector<int> x(a.cols(), 0);
  for (std::size_t i = 0; i < rr.rank; ++i) {
    x[rr.pivots[i]] = rr.matrix.at(i, a.cols());
  }
  return x;
}

}  // namespace qss
