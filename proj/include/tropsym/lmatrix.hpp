#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tropsym/laurent.hpp"

namespace tropsym {

// Dense matrix over LaurentPoly, row-major.
class LMatrix {
  public:
    LMatrix() : rows_(0), cols_(0) {}
    LMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    LaurentPoly& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const LaurentPoly& at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

    std::vector<LaurentPoly> column(int c) const {
        std::vector<LaurentPoly> out(rows_);
        for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
        return out;
    }
    void set_column(int c, const std::vector<LaurentPoly>& col) {
        for (int r = 0; r < rows_; ++r) at(r, c) = col[r];
    }

  private:
    int rows_, cols_;
    std::vector<LaurentPoly> a_;
};

// Exact determinant of the square submatrix selected by row_set x col_set
// (0-based indices). Laplace expansion; intended for sizes <= 5.
LaurentPoly lmat_det(const LMatrix& m, const std::vector<int>& row_set,
                     const std::vector<int>& col_set);

// Determinant of the k x k matrix whose columns are given explicitly.
LaurentPoly columns_det(const std::vector<std::vector<LaurentPoly>>& cols);

// Caches full-height minors of a matrix keyed by column bitmask. All minors
// use rows 0..popcount(mask)-1 in order, which is the only shape the
// Pluecker readings need.
class MinorCache {
  public:
    explicit MinorCache(const LMatrix& m) : m_(&m) {}

    const LaurentPoly& minor(std::uint64_t col_mask);

    // Full-height minor from a sorted list of column indices.
    const LaurentPoly& pluecker(const std::vector<int>& cols);

  private:
    const LMatrix* m_;
    std::unordered_map<std::uint64_t, LaurentPoly> cache_;
};

} // namespace tropsym
