#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tropsym/cluster.hpp" // Conv
#include "tropsym/errors.hpp"

namespace tropsym {

// Subtraction-free rational expression in variables x(a,b) and positive
// integer literals. Quotients may appear anywhere; no subtraction exists in
// the grammar.
class SfExpr {
  public:
    enum class Kind { Var, Lit, Sum, Prod, Quot, Pow };

    Kind kind;
    int a = 0, b = 0;              // Var
    long long lit = 0;             // Lit
    long long exp = 0;             // Pow
    std::vector<SfExpr> children;  // Sum/Prod: n-ary; Quot: [num, den]; Pow: [base]

    static SfExpr var(int a, int b) {
        SfExpr e;
        e.kind = Kind::Var;
        e.a = a;
        e.b = b;
        return e;
    }
    static SfExpr literal(long long v) {
        SfExpr e;
        e.kind = Kind::Lit;
        e.lit = v;
        return e;
    }
};

// Grammar:
//   expr   := term ('+' term)*
//   term   := factor (('*' | '/') factor)*
//   factor := primary ('^' int)*
//   primary:= int | ident | '(' expr ')'
// ident is x<a>_<b>, x<a><b> (two single digits), or x<a> (one index, stored
// as (a, 0)). Literals must be >= 1; whitespace is ignored; '#' starts a
// comment when loading files.
SfExpr parse_sfexpr(const std::string& text);

using SfAssignment = std::map<std::pair<int, int>, long long>;

long long trop_eval(const SfExpr& e, const SfAssignment& v, Conv conv);

// Loads one expression per non-comment line.
std::vector<SfExpr> load_sf_file(const std::string& path);

// Collects the variables used in an expression.
void sf_variables(const SfExpr& e, std::vector<std::pair<int, int>>& out);

// Replaces every literal by 1 (tropically a no-op; used as a property check).
SfExpr sf_literals_to_one(const SfExpr& e);

} // namespace tropsym
