#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qmatch/series.hpp"

namespace qmatch {

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

enum class NamedFn { Phi, Psi, Chi, R, G, H, S, T, X, Y, Aq };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// One node of a product expression. The DSL grammar (see parse()) maps
// onto these node kinds one-to-one.
struct Expr {
    enum class Kind {
        Poch,       // ph(a,b) = (q^a; q^b)_inf           : i1=a, i2=b
        EulerF,     // f(k) = (q^k; q^k)_inf              : i1=k
        Theta,      // theta(+-r1, +-r2) = f(+-q^r1,+-q^r2): s1,i1,s2,i2
        Named,      // name(+-q^m)                        : fn, neg_arg, i1=m
        Omega,      // omega(p), p an odd prime           : i1=p
        ExplicitProd,  // omega([..],[..],mod)            : num, den, i1=mod
        Monomial,   // q^k                                : i1=k
        Literal,    // integer constant                   : lit
        Neg,        // -child                             : lhs
        Add, Sub, Mul, Div,                             // lhs, rhs
        Pow,        // child ^ e                          : lhs, i1=e
        Extract,    // U(a, b, child)                     : i1=a, i2=b, lhs
    };

    Kind kind;
    std::int64_t i1 = 0, i2 = 0;
    int s1 = 1, s2 = 1;
    NamedFn fn = NamedFn::Phi;
    bool neg_arg = false;
    Int lit = 0;
    std::vector<std::int64_t> num, den;
    ExprPtr lhs, rhs;
};

// Programmatic constructors (the registry builds its catalog with these).
namespace ex {
ExprPtr poch(std::int64_t a, std::int64_t b);
ExprPtr f(std::int64_t k);
ExprPtr theta(int s1, std::int64_t r1, int s2, std::int64_t r2);
ExprPtr named(NamedFn fn, std::int64_t m = 1, bool neg = false);
ExprPtr omega(std::int64_t p);
ExprPtr explicit_prod(std::vector<std::int64_t> num, std::vector<std::int64_t> den,
                      std::int64_t modulus);
ExprPtr q(std::int64_t k = 1);
ExprPtr lit(Int v);
ExprPtr neg(ExprPtr e);
ExprPtr add(ExprPtr a, ExprPtr b);
ExprPtr sub(ExprPtr a, ExprPtr b);
ExprPtr mul(ExprPtr a, ExprPtr b);
ExprPtr div(ExprPtr a, ExprPtr b);
ExprPtr pow(ExprPtr a, std::int64_t e);
ExprPtr extract(std::int64_t a, std::int64_t b, ExprPtr e);
}  // namespace ex

// Parses the expression DSL. Grammar (whitespace-insensitive):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' int)?
//   base   := 'ph(' int ',' int ')' | 'f(' int ')'
//           | 'theta(' sint ',' sint ')' | name '(' arg ')'
//           | 'omega(' int ')' | 'omega(' list ',' list ',' int ')'
//           | 'U(' int ',' int ',' expr ')'
//           | 'q' ('^' int)? | int | '(' expr ')' | '-' base
//   name   := 'phi'|'psi'|'chi'|'R'|'G'|'H'|'S'|'T'|'X'|'Y'|'aq'
//   arg    := ('-')? 'q' ('^' int)?
//   list   := '[' int (',' int)* ']'
// Throws ParseError with the byte offset of the first bad token.
ExprPtr parse(const std::string& text);

// Inverse of parse up to formatting: evaluate(parse(render(e))) == evaluate(e).
std::string render(const ExprPtr& e);

// Expands the expression to (at least roughly) order N: atoms are built
// at order N and the honest truncation window is tracked through every
// operation, so the result order can differ from N slightly when inner
// substitutions or extractions are involved.
TruncatedSeries evaluate(const ExprPtr& e, std::int64_t N);

}  // namespace qmatch
