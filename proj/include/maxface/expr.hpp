#pragma once

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>

#include "maxface/jet.hpp"

namespace maxface {

// Thrown on malformed expression text; `offset` is the byte position of the
// first offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

enum class ExprKind {
    Constant,
    Variable,
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Pow,
    Sin,
    Cos,
    Exp,
    Sqrt,
};

struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    ExprKind kind;
    double value = 0.0;  // Constant
    int exponent = 0;    // Pow
    NodePtr a, b;
};

}  // namespace detail

// Immutable AST of a real-analytic function of one variable over the grammar
// {u, constants, + - * /, integer ^, sin, cos, exp, sqrt}. Shared subtrees
// make copies cheap; all operations are pure.
class AnalyticExpr {
public:
    AnalyticExpr() = default;  // empty; only assignable

    static AnalyticExpr variable();
    static AnalyticExpr constant(double c);

    bool empty() const { return node_ == nullptr; }

    double eval(double u) const;
    std::complex<double> eval(std::complex<double> z) const;

    // Taylor jet of this expression at `base`, truncated at order k.
    Jet jet(std::complex<double> base, int k, int max_order = kDefaultMaxJetOrder) const;

    // Symbolic d/du; stays inside the grammar.
    AnalyticExpr derivative() const;

    std::string str() const;

    friend bool operator==(const AnalyticExpr& x, const AnalyticExpr& y);
    friend AnalyticExpr operator+(const AnalyticExpr&, const AnalyticExpr&);
    friend AnalyticExpr operator-(const AnalyticExpr&, const AnalyticExpr&);
    friend AnalyticExpr operator*(const AnalyticExpr&, const AnalyticExpr&);
    friend AnalyticExpr operator/(const AnalyticExpr&, const AnalyticExpr&);
    friend AnalyticExpr operator-(const AnalyticExpr&);
    friend AnalyticExpr pow(const AnalyticExpr&, int);
    friend AnalyticExpr sin(const AnalyticExpr&);
    friend AnalyticExpr cos(const AnalyticExpr&);
    friend AnalyticExpr exp(const AnalyticExpr&);
    friend AnalyticExpr sqrt(const AnalyticExpr&);

    static constexpr int kDefaultMaxJetOrder = 16;

    explicit AnalyticExpr(detail::NodePtr n) : node_(std::move(n)) {}
    const detail::NodePtr& node() const { return node_; }

private:
    detail::NodePtr node_;
};

// Parses `text` against the documented grammar. The free variable may be
// written `u` or `t`.
AnalyticExpr parse_expr(const std::string& text);

}  // namespace maxface
