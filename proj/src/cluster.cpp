#include "tropsym/cluster.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace tropsym {

namespace {

long long pos_part(long long x) { return x > 0 ? x : 0; }
int sgn(long long x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

} // namespace

IntMat identity_mat(int n) {
    IntMat m(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const int n = static_cast<int>(a.size());
    const int p = static_cast<int>(b[0].size());
    const int q = static_cast<int>(b.size());
    IntMat out(n, IntVec(p, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < q; ++k)
            for (int j = 0; j < p; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

IntMat mat_transpose(const IntMat& a) {
    const int n = static_cast<int>(a.size());
    const int m = static_cast<int>(a[0].size());
    IntMat out(m, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) out[j][i] = a[i][j];
    return out;
}

IntMat mat_neg(const IntMat& a) {
    IntMat out = a;
    for (auto& row : out)
        for (auto& x : row) x = -x;
    return out;
}

bool mat_eq(const IntMat& a, const IntMat& b) { return a == b; }

std::string mat_str(const IntMat& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < a[i].size(); ++j) os << (j ? "," : "") << a[i][j];
        os << "]";
    }
    os << "]";
    return os.str();
}

int mat_rank(const IntMat& a) {
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i].assign(a[i].begin(), a[i].end());
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            const cpp_int f1 = m[rank][c], f2 = m[r][c];
            for (int j = 0; j < cols; ++j) m[r][j] = m[r][j] * f1 - m[rank][j] * f2;
        }
        ++rank;
    }
    return rank;
}

ExchangeMatrix::ExchangeMatrix(IntMat b) : n_(static_cast<int>(b.size())), b_(std::move(b)) {
    for (const auto& row : b_)
        if (static_cast<int>(row.size()) != n_)
            throw ShapeMismatch("exchange matrix must be square");
    // Propagate d_i/d_j = -b_ji/b_ij over nonzero entries, then rescale each
    // connected component to positive integers <= 6.
    std::vector<long long> num(n_, 0), den(n_, 0); // d_i = num/den, 0 = unassigned
    for (int root = 0; root < n_; ++root) {
        if (num[root] != 0) continue;
        num[root] = 1;
        den[root] = 1;
        std::vector<int> stack{root};
        std::vector<int> comp{root};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n_; ++j) {
                if (i == j) continue;
                const long long bij = b_[i][j], bji = b_[j][i];
                if ((bij == 0) != (bji == 0))
                    throw ShapeMismatch("not skew-symmetrizable: one-sided zero entry");
                if (bij == 0) continue;
                if (sgn(bij) == sgn(bji))
                    throw ShapeMismatch("not skew-symmetrizable: sign pattern");
                // d_i * b_ij = -d_j * b_ji  =>  d_j/d_i = b_ij / (-b_ji)
                long long nj = num[i] * bij;
                long long dj = den[i] * (-bji);
                if (dj < 0) {
                    nj = -nj;
                    dj = -dj;
                }
                long long g = std::gcd(std::abs(nj), std::abs(dj));
                if (g) {
                    nj /= g;
                    dj /= g;
                }
                if (num[j] == 0) {
                    num[j] = nj;
                    den[j] = dj;
                    stack.push_back(j);
                    comp.push_back(j);
                } else if (num[j] * dj != nj * den[j]) {
                    throw ShapeMismatch("not skew-symmetrizable: inconsistent ratios");
                }
            }
        }
        long long L = 1;
        for (int i : comp) L = std::lcm(L, den[i]);
        std::vector<long long> d(comp.size());
        long long g = 0;
        for (std::size_t t = 0; t < comp.size(); ++t) {
            d[t] = num[comp[t]] * (L / den[comp[t]]);
            g = std::gcd(g, std::abs(d[t]));
        }
        for (auto& x : d) {
            x /= g;
            if (x <= 0 || x > 6)
                throw ShapeMismatch("not skew-symmetrizable with diagonal entries <= 6");
        }
        for (std::size_t t = 0; t < comp.size(); ++t)
            for (std::size_t u = 0; u < comp.size(); ++u) {
                int i = comp[t], j = comp[u];
                if (d[t] * b_[i][j] != -d[u] * b_[j][i])
                    throw ShapeMismatch("not skew-symmetrizable: DB not skew");
            }
    }
}

Seed Seed::reference(const ExchangeMatrix& b0) {
    Seed s;
    s.b = b0;
    s.c = identity_mat(b0.n());
    s.g = identity_mat(b0.n());
    return s;
}

Seed mutate_seed(const Seed& s, int k, const ExchangeMatrix& reference_b0) {
    const int n = s.b.n();
    if (k < 1 || k > n) throw NodeOutOfRange(k, n);
    const int kk = k - 1;
    const IntMat& b = s.b.mat();

    IntMat nb(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            nb[i][j] = (i == kk || j == kk)
                           ? -b[i][j]
                           : b[i][j] + sgn(b[i][kk]) * pos_part(b[i][kk] * b[kk][j]);

    // C mutates as the frozen rows of the principal-coefficient extended matrix.
    IntMat nc(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            nc[i][j] = (j == kk)
                           ? -s.c[i][j]
                           : s.c[i][j] + sgn(s.c[i][kk]) * pos_part(s.c[i][kk] * b[kk][j]);

    // G: only column k changes.
    IntMat ng = s.g;
    const IntMat& b0 = reference_b0.mat();
    for (int r = 0; r < n; ++r) {
        long long x = -s.g[r][kk];
        for (int i = 0; i < n; ++i) x += pos_part(b[i][kk]) * s.g[r][i];
        for (int j = 0; j < n; ++j) x -= pos_part(s.c[j][kk]) * b0[r][j];
        ng[r][kk] = x;
    }

    Seed out;
    out.b = ExchangeMatrix(nb);
    out.c = std::move(nc);
    out.g = std::move(ng);
    out.label = s.label;
    out.label.push_back(k);
    return out;
}

IntVec trop_step(const IntVec& v, const ExchangeMatrix& b, int k, Conv conv) {
    const int n = b.n();
    if (k < 1 || k > n) throw NodeOutOfRange(k, n);
    if (static_cast<int>(v.size()) != n) throw ShapeMismatch("vector length != rank");
    const int kk = k - 1;
    IntVec out(v);
    out[kk] = -v[kk];
    for (int j = 0; j < n; ++j) {
        if (j == kk) continue;
        const long long bjk = (conv == Conv::Max) ? b.at(j, kk) : -b.at(j, kk);
        out[j] = v[j] + pos_part(bjk) * v[kk] - bjk * std::min(v[kk], 0LL);
    }
    return out;
}

IntVec trop_compose(const IntVec& v, const ExchangeMatrix& b0, const std::vector<int>& word,
                    Conv conv) {
    IntVec cur = v;
    Seed s = Seed::reference(b0);
    for (int k : word) {
        cur = trop_step(cur, s.b, k, conv);
        s = mutate_seed(s, k, b0);
    }
    return cur;
}

DualityReport check_tropical_duality(const ExchangeMatrix& b0, const std::vector<int>& word) {
    auto run = [](const ExchangeMatrix& b, const std::vector<int>& w) {
        Seed s = Seed::reference(b);
        for (int k : w) s = mutate_seed(s, k, b);
        return s;
    };
    const Seed s = run(b0, word);
    const Seed s_dual = run(b0.dual(), word);
    const Seed s_op = run(b0.op(), word);
    const Seed s_opdual = run(b0.dual().op(), word);

    std::vector<int> rev(word.rbegin(), word.rend());
    const Seed back_op = run(s_op.b, rev);          // C^op_{t0,t}
    const Seed back_opdual = run(s_opdual.b, rev);  // C^{op,dual}_{t0,t}

    const IntMat id = identity_mat(b0.n());
    DualityReport rep;
    rep.g_transpose_cdual = mat_eq(mat_mul(mat_transpose(s.g), s_dual.c), id);
    rep.gdual_transpose_c = mat_eq(mat_mul(mat_transpose(s_dual.g), s.c), id);
    rep.c_op_inverse = mat_eq(mat_mul(s.c, back_op.c), id);
    rep.cdual_opdual_inverse = mat_eq(mat_mul(s_dual.c, back_opdual.c), id);
    if (!rep.all()) {
        std::ostringstream os;
        os << "G=" << mat_str(s.g) << " C=" << mat_str(s.c) << " Cdual=" << mat_str(s_dual.c)
           << " Gdual=" << mat_str(s_dual.g) << " Cop_back=" << mat_str(back_op.c)
           << " Copdual_back=" << mat_str(back_opdual.c);
        rep.detail = os.str();
    }
    return rep;
}

} // namespace tropsym
