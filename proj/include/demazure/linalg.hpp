#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace demazure {

using Rat = mpq_class;

// Dense matrix over exact rationals.  Column-oriented helpers below treat a
// matrix as the span of its columns, which is how graded subspaces of quiver
// representations are carried around.
class Mat {
public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Mat identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rat& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
  const Rat& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const Mat&) const = default;

  Mat operator*(const Mat& rhs) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;

  std::string to_string() const;

private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

// Horizontal concatenation [a | b]; both must have equal row counts.
Mat hstack(const Mat& a, const Mat& b);

size_t rank(Mat m);

// Basis of the null space as columns; cols() == nullity.
Mat kernel_basis(const Mat& m);

// Basis of the column space as columns, in reduced echelon form so that equal
// subspaces produce identical bases.
Mat colspace_basis(const Mat& m);

// Basis of span(a) ∩ span(b), both given by columns.
Mat intersect_columns(const Mat& a, const Mat& b);

// Basis of {u : x·u ∈ span(t)} where t's columns span a subspace of the
// codomain of x.
Mat preimage_basis(const Mat& x, const Mat& t);

// True iff span(a) == span(b).
bool same_column_span(const Mat& a, const Mat& b);

// Inverse of a square matrix of full rank; throws on singular input.
Mat inverse(const Mat& m);

Rat rat_from_string(const std::string& s);

inline Rat rat_from_int(long long x) { return Rat(static_cast<long>(x)); }

}  // namespace demazure
