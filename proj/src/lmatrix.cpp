#include "tropsym/lmatrix.hpp"

#include <bit>

namespace tropsym {

namespace {

LaurentPoly det_recursive(const LMatrix& m, std::vector<int> rows, std::vector<int> cols) {
    const std::size_t n = rows.size();
    if (n == 0) return LaurentPoly::one();
    if (n == 1) return m.at(rows[0], cols[0]);
    LaurentPoly acc;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < n; ++j) {
        const LaurentPoly& piv = m.at(rows[0], cols[j]);
        if (piv.is_zero()) continue;
        std::vector<int> sub_cols;
        sub_cols.reserve(n - 1);
        for (std::size_t t = 0; t < n; ++t)
            if (t != j) sub_cols.push_back(cols[t]);
        LaurentPoly term = piv * det_recursive(m, sub_rows, sub_cols);
        if (j % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

} // namespace

LaurentPoly lmat_det(const LMatrix& m, const std::vector<int>& row_set,
                     const std::vector<int>& col_set) {
    if (row_set.size() != col_set.size())
        throw ShapeMismatch("row and column selections differ in size");
    for (int r : row_set)
        if (r < 0 || r >= m.rows()) throw ShapeMismatch("row index out of range");
    for (int c : col_set)
        if (c < 0 || c >= m.cols()) throw ShapeMismatch("column index out of range");
    return det_recursive(m, row_set, col_set);
}

LaurentPoly columns_det(const std::vector<std::vector<LaurentPoly>>& cols) {
    const int k = static_cast<int>(cols.size());
    LMatrix m(k, k);
    for (int c = 0; c < k; ++c) {
        if (static_cast<int>(cols[c].size()) != k)
            throw ShapeMismatch("column height does not match count");
        for (int r = 0; r < k; ++r) m.at(r, c) = cols[c][r];
    }
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    return lmat_det(m, idx, idx);
}

const LaurentPoly& MinorCache::minor(std::uint64_t col_mask) {
    auto it = cache_.find(col_mask);
    if (it != cache_.end()) return it->second;
    const int r = std::popcount(col_mask);
    LaurentPoly result;
    if (r == 0) {
        result = LaurentPoly::one();
    } else {
        // expand along row r-1
        int pos = 0;
        for (std::uint64_t rest = col_mask; rest; rest &= rest - 1, ++pos) {
            const int c = std::countr_zero(rest);
            const LaurentPoly& e = m_->at(r - 1, c);
            if (e.is_zero()) continue;
            LaurentPoly term = e * minor(col_mask & ~(1ULL << c));
            if ((r - 1 + pos) % 2 == 1) term = -term;
            result += term;
        }
    }
    auto [it2, ok] = cache_.emplace(col_mask, std::move(result));
    (void)ok;
    return it2->second;
}

const LaurentPoly& MinorCache::pluecker(const std::vector<int>& cols) {
    std::uint64_t mask = 0;
    for (int c : cols) mask |= 1ULL << c;
    return minor(mask);
}

} // namespace tropsym
