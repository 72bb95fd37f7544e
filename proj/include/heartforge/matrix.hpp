#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "heartforge/field.hpp"

namespace heartforge {

/// Dense matrix over GF(p) or Q.
///
/// Convention used throughout the library: vectors are rows and maps act on
/// the right, so the composite "f then g" is the product F·G.
class Mat {
 public:
  Mat() : Mat(FieldSpec::rational(), 0, 0) {}
  Mat(FieldSpec f, std::size_t rows, std::size_t cols);

  static Mat identity(FieldSpec f, std::size_t n);
  static Mat zero(FieldSpec f, std::size_t rows, std::size_t cols) {
    return Mat(f, rows, cols);
  }
  /// 1×n coordinate row with a single 1 at position i.
  static Mat unit_row(FieldSpec f, std::size_t n, std::size_t i);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set(std::size_t i, std::size_t j, const Rat& v);
  void set_int(std::size_t i, std::size_t j, long v) { set(i, j, Rat(v)); }
  bool entry_is_zero(std::size_t i, std::size_t j) const;
  /// Entry as a decimal string ("a/b" over Q, residue over GF(p)).
  std::string entry_str(std::size_t i, std::size_t j) const;
  /// Entry as an exact rational; over GF(p) returns the residue as integer.
  Rat entry_rat(std::size_t i, std::size_t j) const;

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Rat& c) const;
  Mat transpose() const;
  Mat pow(std::size_t e) const;  // square matrices

  Mat row(std::size_t i) const { return submatrix(i, 0, 1, cols_); }
  Mat submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                std::size_t nc) const;
  void paste(std::size_t r0, std::size_t c0, const Mat& block);
  /// Stack copies of rows given by indices.
  Mat select_rows(const std::vector<std::size_t>& idx) const;
  Mat select_cols(const std::vector<std::size_t>& idx) const;

  static Mat hstack(const std::vector<Mat>& parts);
  static Mat vstack(const std::vector<Mat>& parts);
  /// Block-diagonal sum.
  static Mat diag_sum(const std::vector<Mat>& parts);
  /// Kronecker product (row-major pairing of coordinates).
  static Mat kronecker(const Mat& a, const Mat& b);

  /// 1×(r·c) row listing entries row-major.
  Mat vec() const;

  std::string str() const;  // for diagnostics

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> fp_;  // entries when field is GF(p)
  std::vector<Rat> qq_;            // entries when field is Q

  friend struct MatAccess;
};

struct RrefResult {
  Mat m;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

/// Reduced row echelon form; rank = pivots.size().
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);

/// Rows spanning {x : x·m = 0}, in reduced echelon form.
Mat kernel_basis(const Mat& m);

/// Some x with x·a = b, or nullopt when the system is inconsistent.
/// Shapes: a is m×n, b is k×n, result is k×m.
std::optional<Mat> solve(const Mat& a, const Mat& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

/// Characteristic polynomial coefficients c_0..c_n of a square matrix,
/// det(xI - m) = sum c_k x^k, computed by Hessenberg reduction.
std::vector<Rat> charpoly(const Mat& m);
/// Field elements λ with det(λI - m) = 0: every root over GF(p) (p scanned
/// exhaustively when small enough), every rational root over Q.
std::vector<Rat> eigenvalues_in_field(const Mat& m);
Mat scalar_to_mat(const FieldSpec& f, const Rat& v, std::size_t n);

/// A subspace of K^n held as a canonical (reduced echelon) row basis, so
/// equal subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(FieldSpec f, std::size_t ambient)
      : basis_(f, 0, ambient) {}
  /// Canonicalizes the spanning rows.
  static Subspace span(const Mat& rows);
  static Subspace full(FieldSpec f, std::size_t ambient) {
    return span(Mat::identity(f, ambient));
  }

  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Mat& row_vec) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Coordinates of v in this basis; v must lie in the subspace.
  Mat coords(const Mat& row_vec) const;
  /// v reduced modulo the subspace.
  Mat reduce(const Mat& row_vec) const;
  /// Ambient coordinate indices not used as pivots (a complement basis).
  std::vector<std::size_t> complement_coords() const;

 private:
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersection(const Subspace& u, const Subspace& v);

/// Deterministic pseudo-random matrix with small integer entries.
Mat random_mat(FieldSpec f, std::size_t rows, std::size_t cols,
               std::uint64_t seed);

}  // namespace heartforge
