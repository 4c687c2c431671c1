#include "tropsym/sfexpr.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

namespace tropsym {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& s) : s_(s) {}

    SfExpr parse() {
        SfExpr e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError("trailing input", pos_);
        return e;
    }

  private:
    SfExpr expr() {
        SfExpr first = term();
        std::vector<SfExpr> parts;
        parts.push_back(std::move(first));
        while (peek() == '+') {
            ++pos_;
            parts.push_back(term());
        }
        if (parts.size() == 1) return std::move(parts[0]);
        SfExpr e;
        e.kind = SfExpr::Kind::Sum;
        e.children = std::move(parts);
        return e;
    }

    SfExpr term() {
        SfExpr cur = factor();
        while (true) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                SfExpr rhs = factor();
                if (cur.kind == SfExpr::Kind::Prod) {
                    cur.children.push_back(std::move(rhs));
                } else {
                    SfExpr e;
                    e.kind = SfExpr::Kind::Prod;
                    e.children.push_back(std::move(cur));
                    e.children.push_back(std::move(rhs));
                    cur = std::move(e);
                }
            } else if (c == '/') {
                ++pos_;
                SfExpr rhs = factor();
                SfExpr e;
                e.kind = SfExpr::Kind::Quot;
                e.children.push_back(std::move(cur));
                e.children.push_back(std::move(rhs));
                cur = std::move(e);
            } else {
                break;
            }
        }
        return cur;
    }

    SfExpr factor() {
        SfExpr base = primary();
        while (peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t at = pos_;
            long long v = integer();
            if (v < 1) throw SyntaxError("exponent must be a positive integer", at);
            SfExpr e;
            e.kind = SfExpr::Kind::Pow;
            e.exp = v;
            e.children.push_back(std::move(base));
            base = std::move(e);
        }
        return base;
    }

    SfExpr primary() {
        skip_ws();
        if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            SfExpr e = expr();
            skip_ws();
            if (peek_raw() != ')') throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (c == '-') throw SyntaxError("negative literal rejected", pos_);
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t at = pos_;
            long long v = integer();
            if (v < 1) throw SyntaxError("literals must be >= 1", at);
            return SfExpr::literal(v);
        }
        if (c == 'x') {
            ++pos_;
            const std::size_t at = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek_raw())))
                throw SyntaxError("expected digits after 'x'", pos_);
            long long first = integer();
            if (peek_raw() == '_') {
                ++pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek_raw())))
                    throw SyntaxError("expected digits after '_'", pos_);
                long long second = integer();
                return SfExpr::var(static_cast<int>(first), static_cast<int>(second));
            }
            const std::size_t ndigits = pos_ - at;
            if (ndigits == 2) // two single-digit indices
                return SfExpr::var(static_cast<int>(first / 10), static_cast<int>(first % 10));
            if (ndigits == 1) // one-dimensional index family
                return SfExpr::var(static_cast<int>(first), 0);
            throw SyntaxError("ambiguous variable index; use x<a>_<b>", at);
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    long long integer() {
        std::size_t at = pos_;
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == at) throw SyntaxError("expected integer", at);
        return v;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char peek_raw() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

SfExpr parse_sfexpr(const std::string& text) { return Parser(text).parse(); }

long long trop_eval(const SfExpr& e, const SfAssignment& v, Conv conv) {
    switch (e.kind) {
    case SfExpr::Kind::Var: {
        auto it = v.find({e.a, e.b});
        if (it == v.end()) throw UnboundVariable(e.a, e.b);
        return it->second;
    }
    case SfExpr::Kind::Lit: return 0;
    case SfExpr::Kind::Sum: {
        long long best = trop_eval(e.children[0], v, conv);
        for (std::size_t i = 1; i < e.children.size(); ++i) {
            long long x = trop_eval(e.children[i], v, conv);
            best = (conv == Conv::Max) ? std::max(best, x) : std::min(best, x);
        }
        return best;
    }
    case SfExpr::Kind::Prod: {
        long long s = 0;
        for (const auto& c : e.children) s += trop_eval(c, v, conv);
        return s;
    }
    case SfExpr::Kind::Quot:
        return trop_eval(e.children[0], v, conv) - trop_eval(e.children[1], v, conv);
    case SfExpr::Kind::Pow: return e.exp * trop_eval(e.children[0], v, conv);
    }
    return 0;
}

std::vector<SfExpr> load_sf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<SfExpr> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (std::all_of(line.begin(), line.end(),
                        [](unsigned char c) { return std::isspace(c); }))
            continue;
        out.push_back(parse_sfexpr(line));
    }
    return out;
}

void sf_variables(const SfExpr& e, std::vector<std::pair<int, int>>& out) {
    if (e.kind == SfExpr::Kind::Var) out.emplace_back(e.a, e.b);
    for (const auto& c : e.children) sf_variables(c, out);
}

SfExpr sf_literals_to_one(const SfExpr& e) {
    SfExpr out = e;
    if (out.kind == SfExpr::Kind::Lit) out.lit = 1;
    for (auto& c : out.children) c = sf_literals_to_one(c);
    return out;
}

} // namespace tropsym
