#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tropsym/errors.hpp"

namespace tropsym {

using BigInt = boost::multiprecision::cpp_int;

// Univariate Laurent polynomial in t, exponents int64, coefficients exact.
// Terms are kept sorted by exponent with no zero coefficients; the zero
// polynomial has no terms.
class LaurentPoly {
  public:
    struct Term {
        long long e;
        BigInt c;
    };

    LaurentPoly() = default;
    LaurentPoly(long long exp, BigInt coeff) {
        if (coeff != 0) terms_.push_back({exp, std::move(coeff)});
    }
    static LaurentPoly constant(BigInt c) { return LaurentPoly(0, std::move(c)); }
    static LaurentPoly monomial(long long e, BigInt c = 1) { return LaurentPoly(e, std::move(c)); }
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(0, 1); }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    long long deg() const {
        if (terms_.empty()) throw ZeroPolynomial();
        return terms_.back().e;
    }
    long long val() const {
        if (terms_.empty()) throw ZeroPolynomial();
        return terms_.front().e;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        return merge(a, b, false);
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        return merge(a, b, true);
    }
    LaurentPoly operator-() const {
        LaurentPoly r(*this);
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return LaurentPoly();
        std::vector<Term> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) prod.push_back({x.e + y.e, x.c * y.c});
        std::sort(prod.begin(), prod.end(),
                  [](const Term& l, const Term& r) { return l.e < r.e; });
        LaurentPoly out;
        out.terms_.reserve(prod.size());
        for (auto& t : prod) {
            if (!out.terms_.empty() && out.terms_.back().e == t.e)
                out.terms_.back().c += t.c;
            else
                out.terms_.push_back(std::move(t));
            if (!out.terms_.empty() && out.terms_.back().c == 0) out.terms_.pop_back();
        }
        return out;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    // multiply by the monomial c * t^e
    LaurentPoly shifted(long long e, const BigInt& c = 1) const {
        if (c == 0) return LaurentPoly();
        LaurentPoly r(*this);
        for (auto& t : r.terms_) {
            t.e += e;
            t.c *= c;
        }
        return r;
    }

    bool operator==(const LaurentPoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].e != o.terms_[i].e || terms_[i].c != o.terms_[i].c) return false;
        return true;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const bool neg = it->c < 0;
            BigInt ac = neg ? BigInt(-it->c) : it->c;
            if (!s.empty())
                s += neg ? " - " : " + ";
            else if (neg)
                s += "-";
            if (ac != 1 || it->e == 0) s += ac.str();
            if (it->e != 0) {
                if (ac != 1) s += "*";
                s += "t";
                if (it->e != 1) s += "^" + std::to_string(it->e);
            }
        }
        return s;
    }

  private:
    static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool sub) {
        LaurentPoly out;
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() ||
                (i < a.terms_.size() && a.terms_[i].e < b.terms_[j].e)) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].e < a.terms_[i].e) {
                Term t = b.terms_[j++];
                if (sub) t.c = -t.c;
                out.terms_.push_back(std::move(t));
            } else {
                BigInt c = sub ? BigInt(a.terms_[i].c - b.terms_[j].c)
                               : BigInt(a.terms_[i].c + b.terms_[j].c);
                if (c != 0) out.terms_.push_back({a.terms_[i].e, std::move(c)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::vector<Term> terms_;
};

enum class LpOp { Add, Sub, Mul };

inline LaurentPoly lp_arith(LpOp op, const LaurentPoly& a, const LaurentPoly& b) {
    switch (op) {
    case LpOp::Add: return a + b;
    case LpOp::Sub: return a - b;
    case LpOp::Mul: return a * b;
    }
    return {};
}

// (deg, val) of a nonzero Laurent polynomial; throws ZeroPolynomial on 0.
inline std::pair<long long, long long> lp_deg_val(const LaurentPoly& p) {
    return {p.deg(), p.val()};
}

} // namespace tropsym
