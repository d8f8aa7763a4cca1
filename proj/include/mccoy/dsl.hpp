#ifndef MCCOY_DSL_HPP
#define MCCOY_DSL_HPP

#include <memory>
#include <string>
#include <vector>

#include "mccoy/ring.hpp"

namespace mccoy {
namespace dsl {

struct ParseError : std::runtime_error {
    unsigned line, column;
    ParseError(unsigned line_, unsigned column_, const std::string& what)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                             std::to_string(column_) + ": " + what),
          line(line_), column(column_) {}
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RingExpr;
using ExprPtr = std::shared_ptr<const RingExpr>;

/// AST over the construction grammar:
///   Z(n) | prod(e,e,...) | M(n,e) | T(n,e) | Rn(n,e) | V(e) | trunc(e,n)
///   | skewquot(e,endo,n) | corner(e,[lit]) | quot(e,k) | op(e)
/// with endo one of id | swap | diagcollapse | table("file").
struct RingExpr {
    enum class Op { Z, Prod, M, T, Rn, V, Trunc, SkewQuot, Corner, Quot, Opp };
    Op op;
    long n = 0;                          // Z modulus / matrix dim / trunc order
    std::vector<ExprPtr> args;
    std::string endo;                    // skewquot
    std::string endo_file;               // skewquot with table(...)
    std::vector<FiniteRing::Index> literal;   // corner idempotent, codec form
    long ideal_index = -1;               // quot
};

ExprPtr parse(const std::string& text);
std::string render(const RingExpr& expr);

struct EvalResult {
    RingPtr ring;
    EndoPtr endo;   // set for skewquot; the endomorphism acting on the base
};

EvalResult eval(const RingExpr& expr);
EvalResult eval(const std::string& text);

}  // namespace dsl
}  // namespace mccoy

#endif
