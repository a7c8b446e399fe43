#include "dwt2d/polymatrix.hpp"

#include <stdexcept>

namespace dwt2d {

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0)
    throw std::invalid_argument("matrix dimensions must be positive");
  e_.resize(static_cast<std::size_t>(rows) * cols);
}

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(Coeff(1));
  return m;
}

LaurentPoly& PolyMatrix::at(int r, int c) {
  return e_[static_cast<std::size_t>(r) * cols_ + c];
}

const LaurentPoly& PolyMatrix::at(int r, int c) const {
  return e_[static_cast<std::size_t>(r) * cols_ + c];
}

bool PolyMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      const LaurentPoly& p = at(r, c);
      if (r == c ? !p.is_one() : !p.is_zero()) return false;
    }
  return true;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return a.e_ == b.e_;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("mat_mul: dimension mismatch");
  PolyMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) {
      LaurentPoly acc;
      for (int k = 0; k < a.cols(); ++k) acc = acc + a.at(r, k) * b.at(k, c);
      out.at(r, c) = acc;
    }
  return out;
}

bool approx_equal(const PolyMatrix& a, const PolyMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (!approx_equal(a.at(r, c), b.at(r, c), tol)) return false;
  return true;
}

}  // namespace dwt2d
