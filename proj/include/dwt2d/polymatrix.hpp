#pragma once

#include <vector>

#include "dwt2d/laurent.hpp"

namespace dwt2d {

// Dense small matrix of Laurent polynomials. Rows and columns follow the
// polyphase component order (ee, oe, eo, oo) for 4x4, (even, odd) for 2x2.
class PolyMatrix {
 public:
  PolyMatrix() : rows_(0), cols_(0) {}
  PolyMatrix(int rows, int cols);

  static PolyMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  LaurentPoly& at(int r, int c);
  const LaurentPoly& at(int r, int c) const;

  bool is_identity() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) {
    return !(a == b);
  }

 private:
  int rows_, cols_;
  std::vector<LaurentPoly> e_;
};

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
inline PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  return mat_mul(a, b);
}

bool approx_equal(const PolyMatrix& a, const PolyMatrix& b, double tol);

}  // namespace dwt2d
