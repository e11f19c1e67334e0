#include "linalg.hpp"

namespace gca {

int FpMatrix::echelonize() {
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int piv = -1;
    for (int r = rank; r < rows_; ++r)
      if (at(r, c)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int k = 0; k < cols_; ++k) std::swap(at(piv, k), at(rank, k));
    std::uint32_t inv = K_->inv(at(rank, c));
    for (int k = c; k < cols_; ++k) at(rank, k) = K_->mul(at(rank, k), inv);
    for (int r = 0; r < rows_; ++r) {
      if (r == rank || !at(r, c)) continue;
      std::uint32_t f = at(r, c);
      for (int k = c; k < cols_; ++k)
        at(r, k) = K_->sub(at(r, k), K_->mul(f, at(rank, k)));
    }
    ++rank;
  }
  return rank;
}

int FpMatrix::rank() const {
  FpMatrix m = *this;
  return m.echelonize();
}

FpMatrix FpMatrix::nullspace() const {
  FpMatrix m = *this;
  int rank = m.echelonize();
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(cols_, false);
  for (int r = 0; r < rank; ++r) {
    int c = 0;
    while (c < cols_ && m.at(r, c) == 0) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  FpMatrix ns(*K_, cols_ - rank, cols_);
  int row = 0;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    ns.at(row, c) = 1;
    for (int r = 0; r < rank; ++r)
      ns.at(row, pivot_col[r]) = K_->neg(m.at(r, c));
    ++row;
  }
  return ns;
}

FpMatrix FpMatrix::inverse() const {
  if (rows_ != cols_) throw Error("inverse of non-square matrix");
  FpMatrix aug(*K_, rows_, 2 * cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_ + r) = 1;
  }
  if (aug.echelonize() != rows_) throw Error("singular matrix");
  FpMatrix inv(*K_, rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
  return inv;
}

FpMatrix FpMatrix::multiply(const FpMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix dimension mismatch");
  FpMatrix out(*K_, rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      std::uint32_t v = at(r, k);
      if (!v) continue;
      for (int c = 0; c < o.cols_; ++c)
        out.at(r, c) = K_->add(out.at(r, c), K_->mul(v, o.at(k, c)));
    }
  return out;
}

}  // namespace gca
