#include "stmax/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "stmax/errors.hpp"

namespace stmax {

BitVec& BitVec::operator^=(const BitVec& o) {
  assert(bits_ == o.bits_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool BitVec::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::optional<std::size_t> BitVec::first_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return (i << 6) + std::countr_zero(words_[i]);
  return std::nullopt;
}

std::vector<std::size_t> BitVec::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back((i << 6) + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

BitMatrix BitMatrix::from_columns(std::size_t rows,
                                  const std::vector<std::vector<std::int32_t>>& cols) {
  BitMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (auto r : cols[j]) m.set(static_cast<std::size_t>(r), j);
  return m;
}

BitVec BitMatrix::row(std::size_t r) const {
  BitVec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    if (get(r, c)) v.set(c);
  return v;
}

BitVec BitMatrix::column(std::size_t c) const {
  BitVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) v.set(r);
  return v;
}

BitVec BitMatrix::apply(const BitVec& v) const {
  assert(v.size() == cols_);
  BitVec out(rows_);
  const auto& vw = v.words();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < wpr_; ++k) acc ^= w_[r * wpr_ + k] & vw[k];
    if (std::popcount(acc) & 1) out.set(r);
  }
  return out;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t k = 0; k < wpr_; ++k) std::swap(w_[a * wpr_ + k], w_[b * wpr_ + k]);
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
  for (std::size_t k = 0; k < wpr_; ++k) w_[dst * wpr_ + k] ^= w_[src * wpr_ + k];
}

void BitMatrix::rref(std::vector<std::size_t>& pivot_cols) {
  pivot_cols.clear();
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols_ && prow < rows_; ++c) {
    std::size_t sel = rows_;
    for (std::size_t r = prow; r < rows_; ++r)
      if (get(r, c)) {
        sel = r;
        break;
      }
    if (sel == rows_) continue;
    swap_rows(sel, prow);
    for (std::size_t r = 0; r < rows_; ++r)
      if (r != prow && get(r, c)) xor_row_into(prow, r);
    pivot_cols.push_back(c);
    ++prow;
  }
}

std::size_t BitMatrix::rank() const {
  BitMatrix m = *this;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols_ && prow < rows_; ++c) {
    std::size_t sel = rows_;
    for (std::size_t r = prow; r < rows_; ++r)
      if (m.get(r, c)) {
        sel = r;
        break;
      }
    if (sel == rows_) continue;
    m.swap_rows(sel, prow);
    for (std::size_t r = prow + 1; r < rows_; ++r)
      if (m.get(r, c)) m.xor_row_into(prow, r);
    ++prow;
  }
  return prow;
}

std::vector<BitVec> BitMatrix::kernel_basis() const {
  BitMatrix m = *this;
  std::vector<std::size_t> pivots;
  m.rref(pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<BitVec> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(cols_);
    v.set(f);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (m.get(i, f)) v.set(pivots[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

ColumnEchelon::ColumnEchelon(std::size_t nrows, std::size_t coeff_capacity)
    : nrows_(nrows), cap_(coeff_capacity), pivot_owner_(nrows, -1) {}

bool ColumnEchelon::insert(const BitVec& v) {
  assert(v.size() == nrows_);
  BitVec cur = v;
  BitVec cc(cap_);
  if (cap_) cc.set(basis_.size());
  for (std::size_t p = 0; p < nrows_; ++p) {
    if (!cur.get(p)) continue;
    std::int32_t k = pivot_owner_[p];
    if (k < 0) {
      pivot_owner_[p] = static_cast<std::int32_t>(basis_.size());
      basis_.push_back(std::move(cur));
      if (cap_) coeff_.push_back(std::move(cc));
      return true;
    }
    cur ^= basis_[k];
    if (cap_) cc ^= coeff_[k];
  }
  return false;
}

BitVec ColumnEchelon::reduce(const BitVec& v) const {
  assert(v.size() == nrows_);
  BitVec cur = v;
  for (std::size_t p = 0; p < nrows_; ++p) {
    if (!cur.get(p)) continue;
    std::int32_t k = pivot_owner_[p];
    if (k >= 0) cur ^= basis_[k];
  }
  return cur;
}

std::pair<BitVec, BitVec> ColumnEchelon::reduce_with_coeffs(const BitVec& v) const {
  assert(cap_ > 0);
  BitVec cur = v;
  BitVec cc(cap_);
  for (std::size_t p = 0; p < nrows_; ++p) {
    if (!cur.get(p)) continue;
    std::int32_t k = pivot_owner_[p];
    if (k >= 0) {
      cur ^= basis_[k];
      cc ^= coeff_[k];
    }
  }
  return {std::move(cur), std::move(cc)};
}

HomologySpace::HomologySpace(const BitMatrix& bnd_out, const BitMatrix& bnd_in)
    : space_dim_(bnd_out.cols()), boundaries_(bnd_out.cols()), reps_ech_(bnd_out.cols(), 0) {
  if (bnd_in.cols() > 0 && bnd_in.rows() != space_dim_)
    throw InternalError("homology: boundary maps have mismatched dimensions");
  for (std::size_t j = 0; j < bnd_in.cols(); ++j) boundaries_.insert(bnd_in.column(j));
  auto cycles = bnd_out.kernel_basis();
  reps_ech_ = ColumnEchelon(space_dim_, cycles.size());
  for (const auto& z : cycles) {
    BitVec canon = boundaries_.reduce(z);
    if (reps_ech_.insert(canon)) reps_.push_back(std::move(canon));
  }
}

BitVec HomologySpace::coords(const BitVec& cycle) const {
  BitVec canon = boundaries_.reduce(cycle);
  auto [res, cc] = reps_ech_.reduce_with_coeffs(canon);
  if (res.any()) throw InternalError("homology coords: vector is not a cycle of this degree");
  BitVec out(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i)
    if (cc.get(i)) out.set(i);
  return out;
}

std::vector<std::int32_t> xor_merge(const std::vector<std::int32_t>& a,
                                    const std::vector<std::int32_t>& b) {
  std::vector<std::int32_t> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else if (b[j] < a[i]) {
      out.push_back(b[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

std::size_t sparse_boundary_rank(const std::vector<std::vector<std::int32_t>>& columns,
                                 std::size_t nrows) {
  std::vector<std::int32_t> pivot_owner(nrows, -1);
  std::vector<std::vector<std::int32_t>> stored;
  std::size_t rank = 0;
  for (const auto& col : columns) {
    std::vector<std::int32_t> cur = col;
    while (!cur.empty()) {
      std::int32_t p = cur.front();
      std::int32_t k = pivot_owner[p];
      if (k < 0) {
        pivot_owner[p] = static_cast<std::int32_t>(stored.size());
        stored.push_back(std::move(cur));
        ++rank;
        break;
      }
      cur = xor_merge(cur, stored[k]);
    }
  }
  return rank;
}

std::size_t boundary_rank(const std::vector<std::vector<std::int32_t>>& columns,
                          std::size_t nrows) {
  constexpr std::size_t kDenseLimit = 4096;
  std::size_t ncols = columns.size();
  if (ncols == 0 || nrows == 0) return 0;
  if (std::max(nrows, ncols) <= kDenseLimit)
    return BitMatrix::from_columns(nrows, columns).rank();
  if (ncols <= nrows) return sparse_boundary_rank(columns, nrows);
  std::vector<std::vector<std::int32_t>> t(nrows);
  for (std::size_t j = 0; j < ncols; ++j)
    for (auto r : columns[j]) t[static_cast<std::size_t>(r)].push_back(static_cast<std::int32_t>(j));
  return sparse_boundary_rank(t, ncols);
}

}  // namespace stmax
