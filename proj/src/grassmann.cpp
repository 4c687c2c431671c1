#include "tropsym/grassmann.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tropsym {

GrContext::GrContext(int k, int n) : k_(k), n_(n) {
    if (k < 2 || n <= k + 1) throw ShapeMismatch("need 2 <= k and n >= k+2");
    d_ = std::gcd(k, n);
    m_ = (k - 1) * (n - k - 1);

    num_.resize(m_);
    den_.resize(m_);
    for (int a = 1; a <= n_ - k_ - 1; ++a) {
        for (int b = 1; b <= k_ - 1; ++b) {
            const int idx = node_index(a, b);
            auto& in = num_[idx];
            auto& out = den_[idx];
            if (a == 1 && b == 1) in.push_back(pluecker_columns(0, 0));
            if (a >= 2) in.push_back(pluecker_columns(a - 1, b));
            if (b >= 2) in.push_back(pluecker_columns(a, b - 1));
            in.push_back(pluecker_columns(a + 1, b + 1));
            out.push_back(pluecker_columns(a + 1, b));
            out.push_back(pluecker_columns(a, b + 1));
            if (a >= 2 && b >= 2) out.push_back(pluecker_columns(a - 1, b - 1));
        }
    }
}

std::vector<int> GrContext::pluecker_columns(int a, int b) const {
    std::vector<int> cols;
    cols.reserve(k_);
    if (a == 0 && b == 0) {
        for (int c = 1; c <= k_; ++c) cols.push_back(c - 1);
        return cols;
    }
    for (int c = 1; c <= k_ - b; ++c) cols.push_back(c - 1);
    for (int c = k_ - b + a + 1; c <= k_ + a; ++c) cols.push_back(c - 1);
    return cols;
}

QuasiAuto QuasiAuto::inverse() const {
    switch (kind) {
    case Kind::Rho: return rho_inv();
    case Kind::RhoInv: return rho();
    case Kind::Theta: return theta();
    case Kind::Tau: return tau_inv();
    case Kind::TauInv: return tau();
    case Kind::Sigma: return sigma_inv(i);
    case Kind::SigmaInv: return sigma(i);
    }
    return *this;
}

std::string QuasiAuto::str() const {
    switch (kind) {
    case Kind::Rho: return "rho";
    case Kind::RhoInv: return "rho-inv";
    case Kind::Theta: return "theta";
    case Kind::Tau: return "tau";
    case Kind::TauInv: return "tau-inv";
    case Kind::Sigma: return "sigma:" + std::to_string(i);
    case Kind::SigmaInv: return "sigma-inv:" + std::to_string(i);
    }
    return "?";
}

QuasiAuto parse_quasi_auto(const std::string& name) {
    if (name == "rho") return QuasiAuto::rho();
    if (name == "rho-inv") return QuasiAuto::rho_inv();
    if (name == "theta") return QuasiAuto::theta();
    if (name == "tau") return QuasiAuto::tau();
    if (name == "tau-inv") return QuasiAuto::tau_inv();
    auto num = [&](std::size_t at) { return std::stoi(name.substr(at)); };
    if (name.rfind("sigma:", 0) == 0) return QuasiAuto::sigma(num(6));
    if (name.rfind("sigma-inv:", 0) == 0) return QuasiAuto::sigma_inv(num(10));
    throw std::runtime_error("unknown map name: " + name);
}

LMatrix web_matrix(const GrContext& ctx, const IntVec& v) {
    const int k = ctx.k(), n = ctx.n();
    if (static_cast<int>(v.size()) != ctx.m()) throw ShapeMismatch("tropical point length != m");
    LMatrix w(k, n);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) w.at(r, c) = (r == c) ? LaurentPoly::one() : LaurentPoly();

    // prefix[b][L] = sum of v at (1..L, b)
    std::vector<std::vector<long long>> prefix(k);
    for (int b = 1; b <= k - 1; ++b) {
        prefix[b].assign(n - k, 0);
        for (int a = 1; a <= n - k - 1; ++a)
            prefix[b][a] = prefix[b][a - 1] + v[ctx.node_index(a, b)];
    }

    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= n - k; ++j) {
            const int len = k - i;
            // chains 0 <= lambda_len <= ... <= lambda_1 <= j-1
            std::map<long long, BigInt> acc;
            std::vector<int> lam(len, 0);
            while (true) {
                long long e = 0;
                for (int b = 1; b <= len; ++b) e += prefix[b][lam[b - 1]];
                acc[e] += 1;
                // next weakly decreasing chain (lam[0] >= lam[1] >= ...)
                int p = len - 1;
                while (p >= 0) {
                    const int cap = (p == 0) ? j - 1 : lam[p - 1];
                    if (lam[p] < cap) {
                        ++lam[p];
                        for (int q = p + 1; q < len; ++q) lam[q] = 0;
                        break;
                    }
                    --p;
                }
                if (p < 0) break;
            }
            LaurentPoly entry;
            const bool negate = ((k + i) % 2) != 0;
            for (auto& [e, c] : acc) entry += LaurentPoly(e, negate ? BigInt(-c) : c);
            w.at(i - 1, k + j - 1) = entry;
        }
    }
    return w;
}

namespace {

using Column = std::vector<LaurentPoly>;

// Column l (0-based, any integer) with twisted periodicity.
Column twisted_column(const LMatrix& m, long long l, int k) {
    const int n = m.cols();
    long long wraps = 0;
    while (l < 0) {
        l += n;
        --wraps;
    }
    while (l >= n) {
        l -= n;
        ++wraps;
    }
    Column col = m.column(static_cast<int>(l));
    if ((k - 1) % 2 != 0 && (wraps % 2) != 0)
        for (auto& p : col) p = -p;
    return col;
}

// Determinant of the listed 1-based (possibly wrapped) columns.
LaurentPoly det_of(const LMatrix& m, const std::vector<long long>& idx1, int k) {
    std::vector<Column> cols;
    cols.reserve(idx1.size());
    for (long long l : idx1) cols.push_back(twisted_column(m, l - 1, k));
    return columns_det(cols);
}

// (z_1 x ... x z_{k-1}) with (z_1 x ... x z_{k-1})^T z = det(z_1,...,z_{k-1},z).
Column cross_product(const std::vector<Column>& cols, int k) {
    Column out(k);
    LMatrix m(k, k - 1);
    for (int c = 0; c < k - 1; ++c)
        for (int r = 0; r < k; ++r) m.at(r, c) = cols[c][r];
    std::vector<int> all_cols(k - 1);
    std::iota(all_cols.begin(), all_cols.end(), 0);
    for (int comp = 0; comp < k; ++comp) {
        std::vector<int> rows;
        rows.reserve(k - 1);
        for (int r = 0; r < k; ++r)
            if (r != comp) rows.push_back(r);
        LaurentPoly minor = lmat_det(m, rows, all_cols);
        if ((comp + k + 1) % 2 != 0) minor = -minor; // cofactor along the last column
        out[comp] = minor;
    }
    return out;
}

Column scaled(Column col, const LaurentPoly& f) {
    for (auto& p : col) p = f * p;
    return col;
}

Column column_sub(const Column& a, const Column& b) {
    Column out(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) out[r] = a[r] - b[r];
    return out;
}

LMatrix apply_rho(const LMatrix& m, int k, bool inverse) {
    LMatrix out(m.rows(), m.cols());
    for (int l = 0; l < m.cols(); ++l)
        out.set_column(l, twisted_column(m, inverse ? l - 1 : l + 1, k));
    return out;
}

LMatrix apply_theta(const LMatrix& m, int k) {
    LMatrix out(m.rows(), m.cols());
    const bool neg = ((k * (k - 1) / 2) % 2) != 0;
    for (int l = 0; l < m.cols(); ++l) {
        Column col = m.column(m.cols() - 1 - l);
        if (neg)
            for (auto& p : col) p = -p;
        out.set_column(l, col);
    }
    return out;
}

// Twist: column i from the cross product of its k-1 predecessors; the
// backward variant uses the k-1 successors. All signs are per-column
// monomial factors, which the coefficient ratios do not see.
LMatrix apply_tau(const LMatrix& m, int k, bool backward) {
    LMatrix out(m.rows(), m.cols());
    for (int l1 = 1; l1 <= m.cols(); ++l1) {
        std::vector<Column> args;
        args.reserve(k - 1);
        if (!backward) {
            for (int s = k - 1; s >= 1; --s) args.push_back(twisted_column(m, l1 - s - 1, k));
        } else {
            for (int s = k - 1; s >= 1; --s) args.push_back(twisted_column(m, l1 + s - 1, k));
        }
        Column col = cross_product(args, k);
        if (!backward && l1 <= k - 1 && ((l1 * (k - l1)) % 2) != 0)
            for (auto& p : col) p = -p;
        out.set_column(l1 - 1, col);
    }
    return out;
}

LMatrix apply_sigma(const LMatrix& m, const GrContext& ctx, int i, bool inverse);

LMatrix apply_map(const LMatrix& m, const QuasiAuto& f, const GrContext& ctx) {
    const int k = ctx.k();
    switch (f.kind) {
    case QuasiAuto::Kind::Rho: return apply_rho(m, k, false);
    case QuasiAuto::Kind::RhoInv: return apply_rho(m, k, true);
    case QuasiAuto::Kind::Theta: return apply_theta(m, k);
    case QuasiAuto::Kind::Tau: return apply_tau(m, k, false);
    case QuasiAuto::Kind::TauInv: return apply_tau(m, k, true);
    case QuasiAuto::Kind::Sigma: return apply_sigma(m, ctx, f.i, false);
    case QuasiAuto::Kind::SigmaInv: return apply_sigma(m, ctx, f.i, true);
    }
    return m;
}

LMatrix apply_sigma(const LMatrix& m, const GrContext& ctx, int i, bool inverse) {
    const int k = ctx.k(), n = ctx.n(), d = ctx.d();
    if (d < 2) throw ShapeMismatch("braid generators need gcd(k,n) > 1");
    if (i < 1 || i > d) throw NodeOutOfRange(i, d);
    if (i == d) {
        // sigma_d = rho^{-1} o sigma_{d-1} o rho as matrix maps
        LMatrix t = apply_rho(m, k, false);
        t = apply_sigma(t, ctx, d - 1, inverse);
        return apply_rho(t, k, true);
    }
    LMatrix out(m.rows(), m.cols());
    for (long long l1 = 1; l1 <= n; ++l1) {
        const long long r = ((l1 - i) % d + d) % d;
        Column col;
        if (!inverse) {
            if (r == 0) {
                col = twisted_column(m, l1, k); // z_l <- z_{l+1}
            } else if (r == 1) {
                const long long base = l1 - 1; // i + j*d, 1-based
                std::vector<long long> det1, det2;
                det1.push_back(base);
                for (long long c = base + 2; c <= base + k; ++c) det1.push_back(c);
                for (long long c = base + 1; c <= base + k; ++c) det2.push_back(c);
                const LaurentPoly d1 = det_of(m, det1, k);
                const LaurentPoly d2 = det_of(m, det2, k);
                col = column_sub(scaled(twisted_column(m, base + 1 - 1, k), d1),
                                 scaled(twisted_column(m, base - 1, k), d2));
            } else {
                col = m.column(static_cast<int>(l1 - 1));
            }
        } else {
            if (r == 0) {
                const long long base = l1; // i + j*d, 1-based
                std::vector<long long> det1, det2;
                for (long long c = base - k + 1; c <= base - 1; ++c) det1.push_back(c);
                det1.push_back(base + 1);
                for (long long c = base - k + 1; c <= base; ++c) det2.push_back(c);
                const LaurentPoly d1 = det_of(m, det1, k);
                const LaurentPoly d2 = det_of(m, det2, k);
                col = column_sub(scaled(twisted_column(m, base - 1, k), d1),
                                 scaled(twisted_column(m, base + 1 - 1, k), d2));
            } else if (r == 1) {
                col = twisted_column(m, l1 - 2, k); // z_l <- z_{l-1}
            } else {
                col = m.column(static_cast<int>(l1 - 1));
            }
        }
        out.set_column(static_cast<int>(l1 - 1), col);
    }
    return out;
}

} // namespace

std::pair<LaurentPoly, LaurentPoly> yhat_value(const LMatrix& m, const GrContext& ctx, int idx) {
    MinorCache cache(m);
    LaurentPoly num = LaurentPoly::one(), den = LaurentPoly::one();
    for (const auto& cols : ctx.yhat_num(idx)) {
        const LaurentPoly& p = cache.pluecker(cols);
        if (p.is_zero()) throw SingularPivot();
        num *= p;
    }
    for (const auto& cols : ctx.yhat_den(idx)) {
        const LaurentPoly& p = cache.pluecker(cols);
        if (p.is_zero()) throw SingularPivot();
        den *= p;
    }
    return {num, den};
}

std::pair<LaurentPoly, LaurentPoly> yhat_value(const LMatrix& m, const GrContext& ctx, int a,
                                               int b) {
    return yhat_value(m, ctx, ctx.node_index(a, b));
}

namespace {

IntVec read_trop(const GrContext& ctx, const LMatrix& w, Conv conv) {
    MinorCache cache(w);
    IntVec out(ctx.m(), 0);
    for (int idx = 0; idx < ctx.m(); ++idx) {
        long long acc = 0;
        for (const auto& cols : ctx.yhat_num(idx)) {
            const LaurentPoly& p = cache.pluecker(cols);
            if (p.is_zero()) throw SingularPivot();
            acc += (conv == Conv::Max) ? p.deg() : p.val();
        }
        for (const auto& cols : ctx.yhat_den(idx)) {
            const LaurentPoly& p = cache.pluecker(cols);
            if (p.is_zero()) throw SingularPivot();
            acc -= (conv == Conv::Max) ? p.deg() : p.val();
        }
        out[idx] = acc;
    }
    return out;
}

} // namespace

LMatrix apply_quasi_auto(const LMatrix& m, const QuasiAuto& f, const GrContext& ctx) {
    if (m.rows() != ctx.k() || m.cols() != ctx.n())
        throw ShapeMismatch("matrix shape does not match context");
    return apply_map(m, f, ctx);
}

IntVec trop_Q(const GrContext& ctx, const QuasiAuto& f, const IntVec& v, Conv conv) {
    LMatrix w = web_matrix(ctx, v);
    w = apply_map(w, f.inverse(), ctx);
    return read_trop(ctx, w, conv);
}

IntVec trop_Q_word(const GrContext& ctx, const std::vector<QuasiAuto>& word, const IntVec& v,
                   Conv conv) {
    // word = f_1 o f_2 o ... with the rightmost factor acting first, so the
    // inverse matrix maps hit W in reverse list order.
    LMatrix w = web_matrix(ctx, v);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        w = apply_map(w, it->inverse(), ctx);
    return read_trop(ctx, w, conv);
}

} // namespace tropsym
