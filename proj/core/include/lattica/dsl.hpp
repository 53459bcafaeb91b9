#pragma once

#include <string>
#include <vector>

#include "lattica/constructions.hpp"
#include "lattica/involution.hpp"

namespace lattica {

// Parse failure: byte offset into the source plus a description of what the
// parser was ready to accept there.
struct SyntaxError : Error {
    int pos;
    std::string expected;
    SyntaxError(int pos_, std::string expected_, const std::string& msg)
        : Error(msg), pos(pos_), expected(std::move(expected_)) {}
};

// Well-formed expression that still violates the operation table (unknown
// name, wrong arity, argument of the wrong kind, value out of domain).
struct EvalError : Error {
    int pos;
    EvalError(int pos_, const std::string& msg) : Error(msg), pos(pos_) {}
};

// Abstract syntax of the construction language:
//   expr := name '(' arg {',' arg} ')' | word
//   arg  := expr | integer
// Words are the argument keywords (unit, kleene, double3, plain); every
// other leaf is a call or an integer. Kinds and arities are checked by
// eval_expr against the operation table.
struct Expr {
    enum class Kind { Call, Int, Word };
    Kind kind = Kind::Word;
    std::string name;        // Call, Word
    long long value = 0;     // Int
    std::vector<Expr> args;  // Call
    int pos = 0;             // offset of the first token
};

// Parses the whole string (trailing input is an error).
Expr parse_expr(const std::string& text);

// Operation table:
//   chain(n)                     n >= 1
//   bool(k)                      0 <= k <= 20, powerset algebra with complement
//   m(k)                         k >= 1, bounds plus k incomparable midpoints
//   dual(E)                      keeps an involution, drops a weak complement
//   bound(E)                     fresh bottom and top
//   osum(E, E)                   stacked sum on the lattice reducts
//   hsum(E, ...)                 bottoms and tops glued; involution kept
//                                when every summand carries one
//   sandwich(E, E | unit)        self-dual stack; middle needs an involution
//   aol(E)                       two-element sandwich with trivial weak
//                                complement; needs a pseudo-Kleene argument
//   step(E, kleene|double3|plain)
//   tower(E, k, kleene|double3|plain)   evaluates to the final member
Structure eval_expr(const Expr& e);

// parse + eval in one call.
Structure eval_text(const std::string& text);

}  // namespace lattica
