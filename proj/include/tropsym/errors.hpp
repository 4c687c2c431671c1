#pragma once

#include <stdexcept>
#include <string>

namespace tropsym {

struct ZeroPolynomial : std::runtime_error {
    ZeroPolynomial() : std::runtime_error("degree/valuation of the zero polynomial") {}
};

struct ShapeMismatch : std::runtime_error {
    explicit ShapeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NodeOutOfRange : std::out_of_range {
    explicit NodeOutOfRange(int k, int n)
        : std::out_of_range("mutation node " + std::to_string(k) + " out of range [1," +
                            std::to_string(n) + "]") {}
};

struct SingularPivot : std::runtime_error {
    SingularPivot() : std::runtime_error("vanishing determinant at evaluation point") {}
};

struct NotSemistandardizable : std::runtime_error {
    explicit NotSemistandardizable(const std::string& what) : std::runtime_error(what) {}
};

struct NotAFactor : std::runtime_error {
    NotAFactor() : std::runtime_error("tableau is not a row-wise factor") {}
};

struct HasFrozenFactor : std::runtime_error {
    HasFrozenFactor() : std::runtime_error("tableau has a frozen factor") {}
};

struct UnboundVariable : std::runtime_error {
    explicit UnboundVariable(int a, int b)
        : std::runtime_error("unbound variable x(" + std::to_string(a) + "," +
                             std::to_string(b) + ")") {}
};

struct SyntaxError : std::runtime_error {
    std::size_t offset;
    SyntaxError(const std::string& what, std::size_t at)
        : std::runtime_error(what + " at byte " + std::to_string(at)), offset(at) {}
};

struct CapTooSmall : std::runtime_error {
    explicit CapTooSmall(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tropsym
