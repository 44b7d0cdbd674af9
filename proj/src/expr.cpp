#include "qmatch/expr.hpp"

#include <cctype>
#include <sstream>

#include "qmatch/qfactory.hpp"

namespace qmatch {

namespace ex {

namespace {
std::shared_ptr<Expr> node(Expr::Kind k) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    return e;
}
}  // namespace

ExprPtr poch(std::int64_t a, std::int64_t b) {
    auto e = node(Expr::Kind::Poch);
    e->i1 = a; e->i2 = b;
    return e;
}
ExprPtr f(std::int64_t k) {
    auto e = node(Expr::Kind::EulerF);
    e->i1 = k;
    return e;
}
ExprPtr theta(int s1, std::int64_t r1, int s2, std::int64_t r2) {
    auto e = node(Expr::Kind::Theta);
    e->s1 = s1; e->i1 = r1; e->s2 = s2; e->i2 = r2;
    return e;
}
ExprPtr named(NamedFn fn, std::int64_t m, bool neg) {
    auto e = node(Expr::Kind::Named);
    e->fn = fn; e->i1 = m; e->neg_arg = neg;
    return e;
}
ExprPtr omega(std::int64_t p) {
    auto e = node(Expr::Kind::Omega);
    e->i1 = p;
    return e;
}
ExprPtr explicit_prod(std::vector<std::int64_t> num, std::vector<std::int64_t> den,
                      std::int64_t modulus) {
    auto e = node(Expr::Kind::ExplicitProd);
    e->num = std::move(num); e->den = std::move(den); e->i1 = modulus;
    return e;
}
ExprPtr q(std::int64_t k) {
    auto e = node(Expr::Kind::Monomial);
    e->i1 = k;
    return e;
}
ExprPtr lit(Int v) {
    auto e = node(Expr::Kind::Literal);
    e->lit = std::move(v);
    return e;
}
ExprPtr neg(ExprPtr c) {
    auto e = node(Expr::Kind::Neg);
    e->lhs = std::move(c);
    return e;
}
ExprPtr add(ExprPtr a, ExprPtr b) {
    auto e = node(Expr::Kind::Add);
    e->lhs = std::move(a); e->rhs = std::move(b);
    return e;
}
ExprPtr sub(ExprPtr a, ExprPtr b) {
    auto e = node(Expr::Kind::Sub);
    e->lhs = std::move(a); e->rhs = std::move(b);
    return e;
}
ExprPtr mul(ExprPtr a, ExprPtr b) {
    auto e = node(Expr::Kind::Mul);
    e->lhs = std::move(a); e->rhs = std::move(b);
    return e;
}
ExprPtr div(ExprPtr a, ExprPtr b) {
    auto e = node(Expr::Kind::Div);
    e->lhs = std::move(a); e->rhs = std::move(b);
    return e;
}
ExprPtr pow(ExprPtr a, std::int64_t p) {
    auto e = node(Expr::Kind::Pow);
    e->lhs = std::move(a); e->i1 = p;
    return e;
}
ExprPtr extract(std::int64_t a, std::int64_t b, ExprPtr c) {
    auto e = node(Expr::Kind::Extract);
    e->i1 = a; e->i2 = b; e->lhs = std::move(c);
    return e;
}

}  // namespace ex

// ---------------------------------------------------------------- parser

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExprPtr run() {
        auto e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) { ++pos_; return true; }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::int64_t parse_int() {
        skip_ws();
        std::size_t start = pos_;
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            pos_ = start;
            fail("expected integer");
        }
        std::int64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return negative ? -v : v;
    }

    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected name");
        return text_.substr(start, pos_ - start);
    }

    std::vector<std::int64_t> parse_list() {
        expect('[');
        std::vector<std::int64_t> v;
        if (peek() != ']') {
            v.push_back(parse_int());
            while (eat(',')) v.push_back(parse_int());
        }
        expect(']');
        return v;
    }

    // arg := ('-')? 'q' ('^' int)?
    std::pair<bool, std::int64_t> parse_arg() {
        bool neg = eat('-');
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != 'q') fail("expected 'q' argument");
        ++pos_;
        std::int64_t m = 1;
        if (eat('^')) m = parse_int();
        if (m < 1) fail("inner argument exponent must be >= 1");
        return {neg, m};
    }

    ExprPtr parse_expr() {
        auto e = parse_term();
        for (;;) {
            if (eat('+')) e = ex::add(e, parse_term());
            else if (eat('-')) e = ex::sub(e, parse_term());
            else return e;
        }
    }

    ExprPtr parse_term() {
        auto e = parse_factor();
        for (;;) {
            if (eat('*')) e = ex::mul(e, parse_factor());
            else if (eat('/')) e = ex::div(e, parse_factor());
            else return e;
        }
    }

    ExprPtr parse_factor() {
        auto e = parse_base();
        if (eat('^')) e = ex::pow(e, parse_int());
        return e;
    }

    int parse_sign() {
        if (eat('+')) return 1;
        if (eat('-')) return -1;
        return 1;  // sign is optional; bare exponents are positive
    }

    ExprPtr parse_base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            auto e = parse_expr();
            expect(')');
            return e;
        }
        if (c == '-') {
            ++pos_;
            return ex::neg(parse_base());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return ex::lit(Int(static_cast<long>(parse_int())));
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected expression");

        std::size_t ident_pos = pos_;
        std::string name = parse_ident();
        if (name == "q") {
            std::int64_t k = 1;
            std::size_t mark = pos_;
            if (eat('^')) {
                // '^' after q is the monomial exponent only if followed by
                // an int that is itself not a factor exponent; grammar has
                // no ambiguity since both mean the same power of q.
                k = parse_int();
                (void)mark;
            }
            return ex::q(k);
        }
        if (name == "ph") {
            expect('(');
            std::int64_t a = parse_int();
            expect(',');
            std::int64_t b = parse_int();
            expect(')');
            if (a < 1 || b < 1) { pos_ = ident_pos; fail("ph requires positive arguments"); }
            return ex::poch(a, b);
        }
        if (name == "f") {
            expect('(');
            std::int64_t k = parse_int();
            expect(')');
            if (k < 1) { pos_ = ident_pos; fail("f requires a positive index"); }
            return ex::f(k);
        }
        if (name == "theta") {
            expect('(');
            int s1 = parse_sign();
            std::int64_t r1 = parse_int();
            expect(',');
            int s2 = parse_sign();
            std::int64_t r2 = parse_int();
            expect(')');
            if (r1 + r2 < 1) { pos_ = ident_pos; fail("theta requires r1 + r2 >= 1"); }
            return ex::theta(s1, r1, s2, r2);
        }
        if (name == "U") {
            expect('(');
            std::int64_t a = parse_int();
            expect(',');
            std::int64_t b = parse_int();
            expect(',');
            auto child = parse_expr();
            expect(')');
            if (a < 1 || b < 0) { pos_ = ident_pos; fail("U requires a >= 1, b >= 0"); }
            return ex::extract(a, b, child);
        }
        if (name == "omega") {
            expect('(');
            if (peek() == '[') {
                auto num = parse_list();
                expect(',');
                auto den = parse_list();
                expect(',');
                std::int64_t m = parse_int();
                expect(')');
                return ex::explicit_prod(std::move(num), std::move(den), m);
            }
            std::int64_t p = parse_int();
            expect(')');
            if (!is_prime(p) || p == 2) { pos_ = ident_pos; fail("omega requires an odd prime"); }
            return ex::omega(p);
        }

        NamedFn fn;
        if (name == "phi") fn = NamedFn::Phi;
        else if (name == "psi") fn = NamedFn::Psi;
        else if (name == "chi") fn = NamedFn::Chi;
        else if (name == "R") fn = NamedFn::R;
        else if (name == "G") fn = NamedFn::G;
        else if (name == "H") fn = NamedFn::H;
        else if (name == "S") fn = NamedFn::S;
        else if (name == "T") fn = NamedFn::T;
        else if (name == "X") fn = NamedFn::X;
        else if (name == "Y") fn = NamedFn::Y;
        else if (name == "aq") fn = NamedFn::Aq;
        else { pos_ = ident_pos; fail("unknown function '" + name + "'"); }

        expect('(');
        auto [neg, m] = parse_arg();
        expect(')');
        return ex::named(fn, m, neg);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

// -------------------------------------------------------------- renderer

namespace {

const char* named_fn_name(NamedFn fn) {
    switch (fn) {
        case NamedFn::Phi: return "phi";
        case NamedFn::Psi: return "psi";
        case NamedFn::Chi: return "chi";
        case NamedFn::R: return "R";
        case NamedFn::G: return "G";
        case NamedFn::H: return "H";
        case NamedFn::S: return "S";
        case NamedFn::T: return "T";
        case NamedFn::X: return "X";
        case NamedFn::Y: return "Y";
        case NamedFn::Aq: return "aq";
    }
    return "?";
}

// Precedence: 0 add/sub, 1 mul/div, 2 unary neg, 3 pow, 4 atom.
int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 0;
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return 1;
        case Expr::Kind::Neg: return 2;
        case Expr::Kind::Pow: return 3;
        default: return 4;
    }
}

void render_to(const ExprPtr& e, std::ostringstream& out, int parent_prec) {
    int prec = precedence(*e);
    bool paren = prec < parent_prec;
    if (paren) out << '(';
    switch (e->kind) {
        case Expr::Kind::Poch:
            out << "ph(" << e->i1 << "," << e->i2 << ")";
            break;
        case Expr::Kind::EulerF:
            out << "f(" << e->i1 << ")";
            break;
        case Expr::Kind::Theta:
            out << "theta(" << (e->s1 > 0 ? "+" : "-") << e->i1 << ","
                << (e->s2 > 0 ? "+" : "-") << e->i2 << ")";
            break;
        case Expr::Kind::Named:
            out << named_fn_name(e->fn) << "(" << (e->neg_arg ? "-" : "") << "q";
            if (e->i1 != 1) out << "^" << e->i1;
            out << ")";
            break;
        case Expr::Kind::Omega:
            out << "omega(" << e->i1 << ")";
            break;
        case Expr::Kind::ExplicitProd: {
            out << "omega([";
            for (std::size_t i = 0; i < e->num.size(); ++i)
                out << (i ? "," : "") << e->num[i];
            out << "],[";
            for (std::size_t i = 0; i < e->den.size(); ++i)
                out << (i ? "," : "") << e->den[i];
            out << "]," << e->i1 << ")";
            break;
        }
        case Expr::Kind::Monomial:
            out << "q";
            if (e->i1 != 1) out << "^" << e->i1;
            break;
        case Expr::Kind::Literal:
            out << e->lit.get_str();
            break;
        case Expr::Kind::Neg:
            // parenthesize a Pow child: '-x^2' would rebind as (-x)^2
            out << "-";
            render_to(e->lhs, out, 4);
            break;
        case Expr::Kind::Add:
            render_to(e->lhs, out, 0);
            out << "+";
            render_to(e->rhs, out, 1);
            break;
        case Expr::Kind::Sub:
            render_to(e->lhs, out, 0);
            out << "-";
            render_to(e->rhs, out, 1);
            break;
        case Expr::Kind::Mul:
            render_to(e->lhs, out, 1);
            out << "*";
            render_to(e->rhs, out, 2);
            break;
        case Expr::Kind::Div:
            render_to(e->lhs, out, 1);
            out << "/";
            render_to(e->rhs, out, 2);
            break;
        case Expr::Kind::Pow:
            render_to(e->lhs, out, 4);
            out << "^" << e->i1;
            break;
        case Expr::Kind::Extract:
            out << "U(" << e->i1 << "," << e->i2 << ",";
            render_to(e->lhs, out, 0);
            out << ")";
            break;
    }
    if (paren) out << ')';
}

}  // namespace

std::string render(const ExprPtr& e) {
    std::ostringstream out;
    render_to(e, out, 0);
    return out.str();
}

// ------------------------------------------------------------- evaluator

namespace {

TruncatedSeries eval_named(NamedFn fn, std::int64_t N) {
    switch (fn) {
        case NamedFn::Phi: return phi(N);
        case NamedFn::Psi: return psi(N);
        case NamedFn::Chi: return chi(N);
        case NamedFn::R: return rr_R(N);
        case NamedFn::G: return rr_G(N);
        case NamedFn::H: return rr_H(N);
        case NamedFn::S: return rgg_S(N);
        case NamedFn::T: return rgg_T(N);
        case NamedFn::X: return slater_X(N);
        case NamedFn::Y: return slater_Y(N);
        case NamedFn::Aq: return cubic_a(N);
    }
    throw Error("unreachable");
}

}  // namespace

TruncatedSeries evaluate(const ExprPtr& e, std::int64_t N) {
    switch (e->kind) {
        case Expr::Kind::Poch:
            return pochhammer(e->i1, e->i2, N);
        case Expr::Kind::EulerF:
            return euler_f(e->i1, N);
        case Expr::Kind::Theta:
            return theta_f(e->s1, e->i1, e->s2, e->i2, N);
        case Expr::Kind::Named: {
            std::int64_t m = e->i1;
            std::int64_t base_order = (N + m - 1) / m;
            TruncatedSeries s = eval_named(e->fn, base_order);
            // name(-q^m) means q -> -q^m: alternate signs first, then
            // stretch exponents by m.
            if (e->neg_arg) s = s.alternate_sign();
            s = s.substitute_power(m);
            if (s.order() > N) s = s.truncate(N);
            return s;
        }
        case Expr::Kind::Omega:
            return residue_product(e->i1, N);
        case Expr::Kind::ExplicitProd:
            return explicit_product(e->num, e->den, e->i1, N);
        case Expr::Kind::Monomial:
            return TruncatedSeries::monomial(1, e->i1, N + std::max<std::int64_t>(e->i1, 0) + 1);
        case Expr::Kind::Literal:
            return TruncatedSeries::constant(e->lit, N);
        case Expr::Kind::Neg:
            return evaluate(e->lhs, N).scalar_mul(-1);
        case Expr::Kind::Add:
            return evaluate(e->lhs, N).add(evaluate(e->rhs, N));
        case Expr::Kind::Sub:
            return evaluate(e->lhs, N).sub(evaluate(e->rhs, N));
        case Expr::Kind::Mul:
            return evaluate(e->lhs, N).mul(evaluate(e->rhs, N));
        case Expr::Kind::Div:
            return evaluate(e->lhs, N).mul(evaluate(e->rhs, N).invert());
        case Expr::Kind::Pow:
            return evaluate(e->lhs, N).pow(e->i1);
        case Expr::Kind::Extract: {
            // Demand enough of the child that the extraction window is ~N.
            std::int64_t child_order = e->i1 * N + e->i2;
            return evaluate(e->lhs, child_order).extract(ExtractionSpec(e->i1, e->i2));
        }
    }
    throw Error("unreachable");
}

}  // namespace qmatch
