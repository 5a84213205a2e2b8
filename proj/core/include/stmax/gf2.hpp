#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace stmax {

// Dense bit vector over GF(2). Unused high bits of the last word stay zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& o);
  bool any() const;
  std::optional<std::size_t> first_set() const;
  std::vector<std::size_t> ones() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Dense row-major bit matrix over GF(2).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  // Columns given as strictly increasing row-index lists.
  static BitMatrix from_columns(std::size_t rows,
                                const std::vector<std::vector<std::int32_t>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c) {
    w_[r * wpr_ + (c >> 6)] |= std::uint64_t{1} << (c & 63);
  }
  void flip(std::size_t r, std::size_t c) {
    w_[r * wpr_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
  }

  BitVec row(std::size_t r) const;
  BitVec column(std::size_t c) const;

  // Matrix-vector product; v is indexed by columns.
  BitVec apply(const BitVec& v) const;

  std::size_t rank() const;
  // Basis of the null space {v : M v = 0}.
  std::vector<BitVec> kernel_basis() const;

 private:
  void swap_rows(std::size_t a, std::size_t b);
  void xor_row_into(std::size_t src, std::size_t dst);
  // In-place reduced row echelon form; records pivot column indices.
  void rref(std::vector<std::size_t>& pivot_cols);

  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> w_;
};

// Incremental echelon basis for a growing set of vectors, with optional
// tracking of expansion coefficients over the successfully inserted ones.
// Reduction modulo the span is canonical: residuals vanish on every pivot row.
class ColumnEchelon {
 public:
  explicit ColumnEchelon(std::size_t nrows, std::size_t coeff_capacity = 0);

  // Reduce v against the basis and store the residual if nonzero.
  // Returns true when v was independent of the current span.
  bool insert(const BitVec& v);

  BitVec reduce(const BitVec& v) const;

  // Residual plus coefficients c with v = sum c_i gen_i + residual, where
  // gen_i is the i-th successfully inserted vector. Needs coeff_capacity > 0.
  std::pair<BitVec, BitVec> reduce_with_coeffs(const BitVec& v) const;

  std::size_t rank() const { return basis_.size(); }

 private:
  std::size_t nrows_;
  std::size_t cap_;
  std::vector<BitVec> basis_;
  std::vector<BitVec> coeff_;
  std::vector<std::int32_t> pivot_owner_;  // pivot row -> basis index, or -1
};

// Homology of one degree of a chain complex over GF(2), with coordinates of
// arbitrary cycles in the chosen representative basis.
class HomologySpace {
 public:
  // bnd_out: boundary map leaving this degree (rows = dim one below).
  // bnd_in: boundary map entering this degree (cols = dim one above).
  HomologySpace(const BitMatrix& bnd_out, const BitMatrix& bnd_in);

  std::size_t dim() const { return reps_.size(); }
  std::size_t space_dim() const { return space_dim_; }
  const std::vector<BitVec>& representatives() const { return reps_; }

  // Coordinates of a cycle in the representative basis; throws InternalError
  // if the vector does not reduce into the span (i.e. is not a cycle here).
  BitVec coords(const BitVec& cycle) const;

 private:
  std::size_t space_dim_;
  ColumnEchelon boundaries_;
  ColumnEchelon reps_ech_;
  std::vector<BitVec> reps_;
};

// Symmetric difference of two strictly increasing index lists.
std::vector<std::int32_t> xor_merge(const std::vector<std::int32_t>& a,
                                    const std::vector<std::int32_t>& b);

// Rank over GF(2) of a sparse matrix given as columns of strictly increasing
// row indices.
std::size_t sparse_boundary_rank(const std::vector<std::vector<std::int32_t>>& columns,
                                 std::size_t nrows);

// Rank of a boundary matrix; picks dense bit-packed elimination for small
// shapes and sparse column reduction (transposing to the thin side) otherwise.
std::size_t boundary_rank(const std::vector<std::vector<std::int32_t>>& columns,
                          std::size_t nrows);

}  // namespace stmax
