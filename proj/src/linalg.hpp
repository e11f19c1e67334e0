#ifndef GCA_LINALG_HPP
#define GCA_LINALG_HPP

#include "ring.hpp"

namespace gca {

/// Dense matrix over F_p, row major. Sized for the small coordinate-change
/// and rank problems of this project.
class FpMatrix {
 public:
  FpMatrix(const PrimeField& K, int rows, int cols)
      : K_(&K), rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint32_t& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
  std::uint32_t at(int r, int c) const {
    return a_[std::size_t(r) * cols_ + c];
  }

  /// In-place row echelon; returns the rank.
  int echelonize();
  int rank() const;
  /// Basis of the right nullspace as rows of the returned matrix.
  FpMatrix nullspace() const;
  /// Inverse of a square matrix; throws if singular.
  FpMatrix inverse() const;
  FpMatrix multiply(const FpMatrix& o) const;

 private:
  const PrimeField* K_;
  int rows_, cols_;
  std::vector<std::uint32_t> a_;
};

}  // namespace gca

#endif  // GCA_LINALG_HPP
