#include "tropsym/tableau.hpp"

#include <algorithm>
#include <sstream>

namespace tropsym {

namespace {

void validate_column(int k, int n, const std::vector<int>& col) {
    if (static_cast<int>(col.size()) != k)
        throw NotSemistandardizable("column height != k");
    for (int r = 0; r < k; ++r) {
        if (col[r] < 1 || col[r] > n) throw NotSemistandardizable("entry out of [n]");
        if (r > 0 && col[r] <= col[r - 1])
            throw NotSemistandardizable("column not strictly increasing");
    }
}

} // namespace

Tableau::Tableau(int k, int n, const std::vector<std::vector<int>>& cols) : k_(k), n_(n) {
    // Canonical form: rebuild via row multisets so columns come out sorted.
    std::vector<std::vector<int>> rows(k);
    for (const auto& c : cols) {
        validate_column(k, n, c);
        for (int r = 0; r < k; ++r) rows[r].push_back(c[r]);
    }
    *this = from_rows(k, n, std::move(rows));
}

Tableau Tableau::from_rows(int k, int n, std::vector<std::vector<int>> rows) {
    if (static_cast<int>(rows.size()) != k) throw NotSemistandardizable("row count != k");
    const std::size_t m = rows.empty() ? 0 : rows[0].size();
    for (auto& row : rows) {
        if (row.size() != m) throw NotSemistandardizable("ragged rows");
        std::sort(row.begin(), row.end());
    }
    Tableau t(k, n);
    t.cols_.resize(m, std::vector<int>(k));
    for (std::size_t c = 0; c < m; ++c) {
        for (int r = 0; r < k; ++r) t.cols_[c][r] = rows[r][c];
        validate_column(k, n, t.cols_[c]);
    }
    return t;
}

std::vector<std::vector<int>> Tableau::rows() const {
    std::vector<std::vector<int>> out(k_);
    for (const auto& c : cols_)
        for (int r = 0; r < k_; ++r) out[r].push_back(c[r]);
    return out;
}

std::string Tableau::str() const {
    if (cols_.empty()) return "[]";
    std::ostringstream os;
    os << "[";
    for (std::size_t c = 0; c < cols_.size(); ++c) {
        os << (c ? ",[" : "[");
        for (int r = 0; r < k_; ++r) os << (r ? "," : "") << cols_[c][r];
        os << "]";
    }
    os << "]";
    return os.str();
}

Tableau tableau_union(const Tableau& s, const Tableau& t) {
    if (s.k() != t.k() || s.n() != t.n())
        throw ShapeMismatch("union of tableaux with different shapes");
    auto rows_s = s.rows();
    auto rows_t = t.rows();
    for (int r = 0; r < s.k(); ++r)
        rows_s[r].insert(rows_s[r].end(), rows_t[r].begin(), rows_t[r].end());
    return Tableau::from_rows(s.k(), s.n(), std::move(rows_s));
}

Tableau tableau_quotient(const Tableau& t, const Tableau& s) {
    if (s.k() != t.k() || s.n() != t.n())
        throw ShapeMismatch("quotient of tableaux with different shapes");
    auto rows_t = t.rows();
    auto rows_s = s.rows();
    for (int r = 0; r < t.k(); ++r) {
        for (int x : rows_s[r]) {
            auto it = std::find(rows_t[r].begin(), rows_t[r].end(), x);
            if (it == rows_t[r].end()) throw NotAFactor();
            rows_t[r].erase(it);
        }
    }
    return Tableau::from_rows(t.k(), t.n(), std::move(rows_t));
}

namespace {

// Attempts to remove one interval column, i.e. the tableau of one frozen
// variable. Trivial factors are the linear intervals {a+1..a+k}; the frozen
// variables of the quotient-free ring also include the wrapped cyclic
// intervals such as {1,2,n}. Returns true on success with `t` replaced by a
// semistandard quotient.
bool remove_one_interval(Tableau& t, bool cyclic) {
    const int k = t.k(), n = t.n();
    const int limit = cyclic ? n : n - k + 1;
    for (int a = 0; a < limit; ++a) {
        std::vector<int> col(k);
        for (int r = 0; r < k; ++r) col[r] = (a + r) % n + 1;
        std::sort(col.begin(), col.end());
        try {
            Tableau interval(k, n, {col});
            Tableau q = tableau_quotient(t, interval);
            t = q;
            return true;
        } catch (const NotAFactor&) {
        } catch (const NotSemistandardizable&) {
        }
    }
    return false;
}

} // namespace

Tableau reduce(const Tableau& t) {
    Tableau cur = t;
    while (remove_one_interval(cur, false)) {
    }
    return cur;
}

Tableau strip_frozen_factors(const Tableau& t) {
    Tableau cur = t;
    while (remove_one_interval(cur, true)) {
    }
    return cur;
}

bool has_frozen_factor(const Tableau& t) {
    Tableau cur = t;
    return remove_one_interval(cur, true);
}

std::string DominantMonomial::str() const {
    if (exps.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ys, e] : exps) {
        if (!first) os << "*";
        first = false;
        os << "Y(" << ys.first << "," << ys.second << ")";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::vector<int> fundamental_column(int k, int i, int s) {
    const int lo = (i - s) / 2;
    const int skip = k - (i + s) / 2;
    std::vector<int> col;
    col.reserve(k);
    for (int x = lo; x <= lo + k; ++x)
        if (x != skip) col.push_back(x);
    return col;
}

DominantMonomial column_monomial(int k, const std::vector<int>& col) {
    DominantMonomial m;
    for (int p = 1; p < k; ++p)
        for (int w = col[p - 1] + 1; w < col[p]; ++w) m.mul(k - p, k + p - 2 * w, 1);
    return m;
}

DominantMonomial tableau_to_monomial(const Tableau& t) {
    DominantMonomial m;
    for (const auto& c : t.cols()) m.mul(column_monomial(t.k(), c));
    return m;
}

Tableau monomial_to_tableau(int k, int n, const DominantMonomial& m) {
    Tableau out(k, n);
    for (const auto& [ys, e] : m.exps) {
        if (e < 0) throw NotSemistandardizable("monomial is not dominant");
        auto col = fundamental_column(k, ys.first, ys.second);
        for (long long q = 0; q < e; ++q) out = tableau_union(out, Tableau(k, n, {col}));
    }
    return out;
}

Tableau small_gap_form(const Tableau& t) {
    return monomial_to_tableau(t.k(), t.n(), tableau_to_monomial(t));
}

DominantMonomial initial_monomial(int k, int n, int a, int b) {
    DominantMonomial m;
    if (b >= 1 && b <= k - 1 && a >= 1 && a <= n - k)
        for (int j = 1; j <= a; ++j) m.mul(b, b - 2 * j, 1);
    return m;
}

Tableau gvector_to_tableau(const IntVec& g, int k, int n) {
    const int m = (k - 1) * (n - k - 1);
    if (static_cast<int>(g.size()) != m) throw ShapeMismatch("g-vector length != (k-1)(n-k-1)");
    DominantMonomial mono;
    for (int a = 1; a <= n - k - 1; ++a)
        for (int b = 1; b <= k - 1; ++b)
            mono.mul(initial_monomial(k, n, a, b), g[(a - 1) * (k - 1) + (b - 1)]);
    // Clear denominators with full frozen windows, one power per color as
    // needed to make every exponent nonnegative.
    for (int color = 1; color <= k - 1; ++color) {
        long long need = 0;
        for (const auto& [ys, e] : mono.exps)
            if (ys.first == color && e < 0) need = std::max(need, -e);
        if (need > 0) mono.mul(initial_monomial(k, n, n - k, color), need);
    }
    return strip_frozen_factors(monomial_to_tableau(k, n, mono));
}

IntVec tableau_to_gvector(const Tableau& t) {
    if (has_frozen_factor(t)) throw HasFrozenFactor();
    const int k = t.k(), n = t.n();
    DominantMonomial m = tableau_to_monomial(t);
    IntVec g((k - 1) * (n - k - 1), 0);
    auto expo = [&](int i, int s) {
        auto it = m.exps.find({i, s});
        return it == m.exps.end() ? 0LL : it->second;
    };
    for (int a = 1; a <= n - k - 1; ++a)
        for (int b = 1; b <= k - 1; ++b)
            g[(a - 1) * (k - 1) + (b - 1)] = expo(b, b - 2 * a) - expo(b, b - 2 * (a + 1));
    return g;
}

int gvector_degree(const IntVec& g, int k, int n) {
    return gvector_to_tableau(g, k, n).num_cols();
}

Tableau bender_knuth(const Tableau& t, int i) {
    if (i < 1 || i >= t.n()) throw NodeOutOfRange(i, t.n() - 1);
    const int k = t.k();
    auto grid = t.rows();
    const int m = t.num_cols();
    // Cells holding i with i+1 directly below (same column) are locked pairs.
    std::vector<std::vector<bool>> locked(k, std::vector<bool>(m, false));
    for (int r = 0; r + 1 < k; ++r)
        for (int c = 0; c < m; ++c)
            if (grid[r][c] == i && grid[r + 1][c] == i + 1) {
                locked[r][c] = true;
                locked[r + 1][c] = true;
            }
    for (int r = 0; r < k; ++r) {
        int free_i = 0, free_i1 = 0, first = -1;
        for (int c = 0; c < m; ++c) {
            if (locked[r][c]) continue;
            if (grid[r][c] == i) {
                ++free_i;
                if (first < 0) first = c;
            } else if (grid[r][c] == i + 1) {
                ++free_i1;
                if (first < 0) first = c;
            }
        }
        int put_i = free_i1, put_i1 = free_i;
        for (int c = first; c < m && (put_i || put_i1); ++c) {
            if (locked[r][c] || (grid[r][c] != i && grid[r][c] != i + 1)) continue;
            if (put_i > 0) {
                grid[r][c] = i;
                --put_i;
            } else {
                grid[r][c] = i + 1;
                --put_i1;
            }
        }
    }
    return Tableau::from_rows(k, t.n(), std::move(grid));
}

Tableau promotion(const Tableau& t) {
    Tableau cur = t;
    for (int i = t.n() - 1; i >= 1; --i) cur = bender_knuth(cur, i);
    return cur;
}

Tableau evacuation(const Tableau& t) {
    Tableau cur = t;
    for (int j = t.n() - 1; j >= 1; --j)
        for (int i = 1; i <= j; ++i) cur = bender_knuth(cur, i);
    return cur;
}

} // namespace tropsym
