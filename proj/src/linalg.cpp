#include "demazure/linalg.hpp"

#include <sstream>

#include "demazure/errors.hpp"

namespace demazure {

namespace {

// Reduced row echelon form in place; returns pivot column indices.
std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && m.at(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
    }
    Rat inv = 1 / m.at(row, col);
    for (size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rat f = m.at(r, col);
      for (size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (const Rat& x : e_) {
    if (x != 0) return false;
  }
  return true;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_) {
    throw Error(ErrorCode::bad_input, "matrix product shape mismatch");
  }
  Mat out(rows_, rhs.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  }
  return out;
}

Mat Mat::operator+(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(ErrorCode::bad_input, "matrix sum shape mismatch");
  }
  Mat out(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + rhs.e_[i];
  return out;
}

Mat Mat::operator-(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(ErrorCode::bad_input, "matrix difference shape mismatch");
  }
  Mat out(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - rhs.e_[i];
  return out;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  for (size_t r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " ");
    for (size_t c = 0; c < cols_; ++c) {
      os << at(r, c).get_str() << (c + 1 < cols_ ? " " : "");
    }
    os << (r + 1 < rows_ ? ";\n" : "]");
  }
  return os.str();
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::bad_input, "hstack row mismatch");
  }
  Mat out(a.rows(), a.cols() + b.cols());
  for (size_t r = 0; r < a.rows(); ++r) {
    for (size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    for (size_t c = 0; c < b.cols(); ++c) out.at(r, a.cols() + c) = b.at(r, c);
  }
  return out;
}

size_t rank(Mat m) { return rref(m).size(); }

Mat kernel_basis(const Mat& m) {
  Mat r = m;
  std::vector<size_t> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;

  std::vector<size_t> free_cols;
  for (size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Mat out(m.cols(), free_cols.size());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    size_t fc = free_cols[k];
    out.at(fc, k) = 1;
    for (size_t i = 0; i < pivots.size(); ++i) out.at(pivots[i], k) = -r.at(i, fc);
  }
  return out;
}

Mat colspace_basis(const Mat& m) {
  // Row-reduce the transpose; nonzero rows transpose back to a canonical basis.
  Mat t(m.cols(), m.rows());
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
  }
  size_t nr = rref(t).size();
  Mat out(m.rows(), nr);
  for (size_t i = 0; i < nr; ++i) {
    for (size_t r = 0; r < m.rows(); ++r) out.at(r, i) = t.at(i, r);
  }
  return out;
}

Mat intersect_columns(const Mat& a, const Mat& b) {
  if (a.cols() == 0 || b.cols() == 0) return Mat(a.rows(), 0);
  Mat nb(b.rows(), b.cols());
  for (size_t r = 0; r < b.rows(); ++r) {
    for (size_t c = 0; c < b.cols(); ++c) nb.at(r, c) = -b.at(r, c);
  }
  Mat k = kernel_basis(hstack(a, nb));
  // the a-part of each kernel vector spans the intersection
  Mat coeff(a.cols(), k.cols());
  for (size_t r = 0; r < a.cols(); ++r) {
    for (size_t c = 0; c < k.cols(); ++c) coeff.at(r, c) = k.at(r, c);
  }
  return colspace_basis(a * coeff);
}

Mat preimage_basis(const Mat& x, const Mat& t) {
  if (t.cols() == 0) return kernel_basis(x);
  Mat nt(t.rows(), t.cols());
  for (size_t r = 0; r < t.rows(); ++r) {
    for (size_t c = 0; c < t.cols(); ++c) nt.at(r, c) = -t.at(r, c);
  }
  Mat k = kernel_basis(hstack(x, nt));
  Mat top(x.cols(), k.cols());
  for (size_t r = 0; r < x.cols(); ++r) {
    for (size_t c = 0; c < k.cols(); ++c) top.at(r, c) = k.at(r, c);
  }
  return colspace_basis(top);
}

bool same_column_span(const Mat& a, const Mat& b) {
  return colspace_basis(a) == colspace_basis(b);
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::bad_input, "inverse of non-square matrix");
  }
  Mat aug = hstack(m, Mat::identity(m.rows()));
  std::vector<size_t> pivots = rref(aug);
  // invertible iff every pivot lands in the left block
  if (pivots.size() != m.rows() || (!pivots.empty() && pivots.back() >= m.cols())) {
    throw Error(ErrorCode::bad_input, "matrix is singular");
  }
  Mat out(m.rows(), m.rows());
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.rows(); ++c) out.at(r, c) = aug.at(r, m.rows() + c);
  }
  return out;
}

Rat rat_from_string(const std::string& s) {
  try {
    Rat r(s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    throw Error(ErrorCode::bad_input, "bad rational literal: " + s);
  }
}

}  // namespace demazure
