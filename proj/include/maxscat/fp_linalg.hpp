#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace maxscat {

// Dense matrix over the prime field F_p, row-major uint8 entries.
struct FpMat {
  std::uint32_t p = 2;
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<std::uint8_t> a;

  FpMat() = default;
  FpMat(std::uint32_t p_, std::uint32_t r, std::uint32_t c)
      : p(p_), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  std::uint8_t& at(std::uint32_t r, std::uint32_t c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  std::uint8_t at(std::uint32_t r, std::uint32_t c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

inline std::uint8_t fp_inv(std::uint32_t v, std::uint32_t p) {
  std::uint32_t r = 1, b = v % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint8_t>(r);
}

// In-place Gauss-Jordan (reduced = true) or echelon form; returns the rank.
inline std::uint32_t fp_row_reduce(FpMat& M, bool reduced = true) {
  const std::uint32_t p = M.p;
  std::uint32_t rank = 0;
  for (std::uint32_t col = 0; col < M.cols && rank < M.rows; ++col) {
    std::uint32_t piv = rank;
    while (piv < M.rows && M.at(piv, col) == 0) ++piv;
    if (piv == M.rows) continue;
    if (piv != rank)
      for (std::uint32_t c = 0; c < M.cols; ++c) std::swap(M.at(piv, c), M.at(rank, c));
    std::uint32_t pi = fp_inv(M.at(rank, col), p);
    if (pi != 1)
      for (std::uint32_t c = col; c < M.cols; ++c)
        M.at(rank, c) = static_cast<std::uint8_t>(M.at(rank, c) * pi % p);
    for (std::uint32_t r = reduced ? 0 : rank + 1; r < M.rows; ++r) {
      if (r == rank) continue;
      std::uint32_t f = M.at(r, col);
      if (!f) continue;
      for (std::uint32_t c = col; c < M.cols; ++c)
        M.at(r, c) = static_cast<std::uint8_t>((M.at(r, c) + f * (p - M.at(rank, c))) % p);
    }
    ++rank;
  }
  return rank;
}

inline std::uint32_t fp_rank(FpMat M) { return fp_row_reduce(M, false); }

// Basis of the right null space {x : Mx = 0}, each vector of length M.cols.
inline std::vector<std::vector<std::uint8_t>> fp_nullspace(FpMat M) {
  const std::uint32_t p = M.p;
  std::vector<std::uint32_t> pivcols;
  std::uint32_t rank = 0;
  for (std::uint32_t col = 0; col < M.cols && rank < M.rows; ++col) {
    std::uint32_t piv = rank;
    while (piv < M.rows && M.at(piv, col) == 0) ++piv;
    if (piv == M.rows) continue;
    if (piv != rank)
      for (std::uint32_t c = 0; c < M.cols; ++c) std::swap(M.at(piv, c), M.at(rank, c));
    std::uint32_t pi = fp_inv(M.at(rank, col), p);
    if (pi != 1)
      for (std::uint32_t c = col; c < M.cols; ++c)
        M.at(rank, c) = static_cast<std::uint8_t>(M.at(rank, c) * pi % p);
    for (std::uint32_t r = 0; r < M.rows; ++r) {
      if (r == rank) continue;
      std::uint32_t f = M.at(r, col);
      if (!f) continue;
      for (std::uint32_t c = col; c < M.cols; ++c)
        M.at(r, c) = static_cast<std::uint8_t>((M.at(r, c) + f * (p - M.at(rank, c))) % p);
    }
    pivcols.push_back(col);
    ++rank;
  }
  std::vector<bool> is_piv(M.cols, false);
  for (auto c : pivcols) is_piv[c] = true;
  std::vector<std::vector<std::uint8_t>> basis;
  for (std::uint32_t c = 0; c < M.cols; ++c) {
    if (is_piv[c]) continue;
    std::vector<std::uint8_t> v(M.cols, 0);
    v[c] = 1;
    for (std::uint32_t k = 0; k < rank; ++k)
      v[pivcols[k]] = static_cast<std::uint8_t>((p - M.at(k, c)) % p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Incremental F_p row space: rows kept in echelon form with unit pivots,
// ordered by pivot column.
class FpSpan {
 public:
  FpSpan(std::uint32_t p, std::uint32_t cols) : p_(p), cols_(cols) {}

  std::uint32_t dim() const { return static_cast<std::uint32_t>(rows_.size()); }

  bool contains(std::vector<std::uint8_t> v) const { return reduce(v) == cols_; }

  // Adds v to the span; returns false if it was already contained.
  bool insert(std::vector<std::uint8_t> v) {
    std::uint32_t piv = reduce(v);
    if (piv == cols_) return false;
    std::uint32_t pi = fp_inv(v[piv], p_);
    if (pi != 1)
      for (auto& x : v) x = static_cast<std::uint8_t>(x * pi % p_);
    auto it = rows_.begin();
    while (it != rows_.end() && pivot_of(*it) < piv) ++it;
    rows_.insert(it, std::move(v));
    return true;
  }

 private:
  std::uint32_t pivot_of(const std::vector<std::uint8_t>& r) const {
    for (std::uint32_t c = 0; c < cols_; ++c)
      if (r[c]) return c;
    return cols_;
  }
  // Eliminates v against stored rows; returns its pivot column, or cols_ if v
  // reduces to zero.
  std::uint32_t reduce(std::vector<std::uint8_t>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    for (const auto& r : rows_) {
      std::uint32_t c = pivot_of(r);
      std::uint32_t f = v[c];
      if (!f) continue;
      for (std::uint32_t j = c; j < cols_; ++j)
        v[j] = static_cast<std::uint8_t>((v[j] + f * (p_ - r[j])) % p_);
    }
    return pivot_of(v);
  }

  std::uint32_t p_, cols_;
  std::vector<std::vector<std::uint8_t>> rows_;
};

}  // namespace maxscat
