#include "brauer/expr.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace brauer {

Expr make_num(const Rat& r) {
    if (r < 0) throw InternalError("negative literal; use a Neg node");
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Num;
    n->num = r;
    return n;
}

Expr make_imag() {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Imag;
    return n;
}

Expr make_var(char name) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::VarRef;
    n->var = name;
    return n;
}

Expr make_binary(ExprKind k, Expr l, Expr r) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
}

Expr make_neg(Expr x) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Neg;
    n->lhs = std::move(x);
    return n;
}

Expr make_pow(Expr base, unsigned e) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Pow;
    n->lhs = std::move(base);
    n->exp = e;
    return n;
}

Expr make_sym(Expr a, Expr b) { return make_binary(ExprKind::Sym, std::move(a), std::move(b)); }

bool expr_equal(const Expr& a, const Expr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprKind::Num: return a->num == b->num;
        case ExprKind::Imag: return true;
        case ExprKind::VarRef: return a->var == b->var;
        case ExprKind::Neg: return expr_equal(a->lhs, b->lhs);
        case ExprKind::Pow: return a->exp == b->exp && expr_equal(a->lhs, b->lhs);
        default: return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    }
}

// ---- printing ---------------------------------------------------------------

namespace {

// precedence levels, highest binds tightest
enum Prec { kEntry = 0, kSum = 1, kProd = 2, kPower = 3, kAtom = 4 };

int precedence(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Num:
        case ExprKind::Imag:
        case ExprKind::VarRef:
        case ExprKind::Sym: return kAtom;
        case ExprKind::Pow: return kPower;
        case ExprKind::Mul: return kProd;
        case ExprKind::Add:
        case ExprKind::Sub:
        case ExprKind::Neg: return kSum;
        case ExprKind::Div: return kEntry;
    }
    return kAtom;
}

void print(const Expr& e, int min_prec, bool leftmost, std::ostringstream& os) {
    int prec = precedence(e);
    bool parens = prec < min_prec || (e->kind == ExprKind::Neg && !leftmost);
    if (parens) os << "(";
    switch (e->kind) {
        case ExprKind::Num: os << rat_str(e->num); break;
        case ExprKind::Imag: os << "i"; break;
        case ExprKind::VarRef: os << e->var; break;
        case ExprKind::Add:
            print(e->lhs, kSum, parens || leftmost, os);
            os << " + ";
            print(e->rhs, kProd, false, os);
            break;
        case ExprKind::Sub:
            print(e->lhs, kSum, parens || leftmost, os);
            os << " - ";
            print(e->rhs, kProd, false, os);
            break;
        case ExprKind::Neg:
            os << "-";
            print(e->lhs, kProd, false, os);
            break;
        case ExprKind::Mul:
            print(e->lhs, kProd, false, os);
            os << "*";
            print(e->rhs, kPower, false, os);
            break;
        case ExprKind::Div:
            if (parens)
                throw InternalError("division is only representable at entry level");
            print(e->lhs, kSum, true, os);
            os << " / ";
            print(e->rhs, kSum, true, os);
            break;
        case ExprKind::Pow:
            print(e->lhs, kAtom, false, os);
            os << "^" << e->exp;
            break;
        case ExprKind::Sym:
            os << "sym(";
            print(e->lhs, kEntry, true, os);
            os << ", ";
            print(e->rhs, kEntry, true, os);
            os << ")";
            break;
    }
    if (parens) os << ")";
}

} // namespace

std::string expr_str(const Expr& e) {
    std::ostringstream os;
    print(e, kEntry, true, os);
    return os.str();
}

// ---- lexer / parser ----------------------------------------------------------

namespace {

enum class Tok { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    Rat num;
    std::string ident;
    std::size_t offset;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            std::string digits = text.substr(i, j - i);
            // "p/q" with no spaces is a rational literal
            if (j + 1 < text.size() && text[j] == '/' &&
                std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
                std::size_t k = j + 1;
                while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                std::string den = text.substr(j + 1, k - j - 1);
                out.push_back({Tok::Num, make_rat(mpz_class(digits), mpz_class(den)), "", start});
                i = k;
            } else {
                out.push_back({Tok::Num, Rat(mpz_class(digits)), "", start});
                i = j;
            }
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Tok::Ident, Rat(0), text.substr(i, j - i), start});
            i = j;
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case ',': kind = Tok::Comma; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({kind, Rat(0), "", i});
        ++i;
    }
    out.push_back({Tok::End, Rat(0), "", text.size()});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    Expr run() {
        Expr e = entry();
        expect(Tok::End, "trailing input");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    void expect(Tok k, const char* what) {
        if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().offset);
        ++pos_;
    }

    Expr entry() {
        Expr e = expr();
        if (peek().kind == Tok::Slash) {
            take();
            Expr d = expr();
            e = make_binary(ExprKind::Div, e, d);
        }
        return e;
    }

    Expr expr() {
        Expr left;
        if (peek().kind == Tok::Minus) {
            take();
            left = make_neg(term());
        } else {
            left = term();
        }
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            Tok op = take().kind;
            Expr right = term();
            left = make_binary(op == Tok::Plus ? ExprKind::Add : ExprKind::Sub, left, right);
        }
        return left;
    }

    Expr term() {
        Expr left = factor();
        while (peek().kind == Tok::Star) {
            take();
            left = make_binary(ExprKind::Mul, left, factor());
        }
        return left;
    }

    Expr factor() {
        Expr b = base();
        if (peek().kind == Tok::Caret) {
            take();
            if (peek().kind != Tok::Num || peek().num.get_den() != 1 || peek().num < 0)
                throw ParseError("expected a natural-number exponent", peek().offset);
            unsigned e = static_cast<unsigned>(take().num.get_num().get_ui());
            b = make_pow(b, e);
        }
        return b;
    }

    Expr base() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Num: return make_num(take().num);
            case Tok::LParen: {
                take();
                Expr e = expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::Ident: {
                Token id = take();
                if (id.ident == "i") return make_imag();
                if (id.ident == "sym") {
                    expect(Tok::LParen, "'(' after sym");
                    Expr a = entry();
                    expect(Tok::Comma, "',' between symbol entries");
                    Expr b = entry();
                    expect(Tok::RParen, "')'");
                    return make_sym(a, b);
                }
                if (id.ident.size() == 1 && std::string("uvSTRXY").find(id.ident[0]) !=
                                                std::string::npos)
                    return make_var(id.ident[0]);
                throw ParseError("unknown identifier '" + id.ident + "'", id.offset);
            }
            default:
                throw ParseError("expected a value", t.offset);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

Expr parse_expr(const std::string& text) { return Parser(text).run(); }

// ---- semantic evaluation -----------------------------------------------------

namespace {

bool contains_sym(const Expr& e) {
    if (!e) return false;
    if (e->kind == ExprKind::Sym) return true;
    return contains_sym(e->lhs) || contains_sym(e->rhs);
}

} // namespace

RatFun eval_scalar(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Num: return RatFun(GaussRat(e->num));
        case ExprKind::Imag: return RatFun(GaussRat::imag_unit());
        case ExprKind::VarRef:
            if (e->var == 'u') return RatFun::variable(Var::U);
            if (e->var == 'v') return RatFun::variable(Var::V);
            throw CalcError(std::string("form coordinate '") + e->var +
                            "' in a scalar expression");
        case ExprKind::Add: return eval_scalar(e->lhs) + eval_scalar(e->rhs);
        case ExprKind::Sub: return eval_scalar(e->lhs) - eval_scalar(e->rhs);
        case ExprKind::Neg: return -eval_scalar(e->lhs);
        case ExprKind::Mul: return eval_scalar(e->lhs) * eval_scalar(e->rhs);
        case ExprKind::Div: {
            RatFun d = eval_scalar(e->rhs);
            if (d.is_zero()) throw CalcError("division by zero");
            return eval_scalar(e->lhs) / d;
        }
        case ExprKind::Pow: return eval_scalar(e->lhs).pow(static_cast<long>(e->exp));
        case ExprKind::Sym: throw CalcError("sym(...) in a scalar expression");
    }
    throw InternalError("unhandled expression node");
}

BrClass eval_class(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Sym: {
            RatFun a = eval_scalar(e->lhs);
            RatFun b = eval_scalar(e->rhs);
            if (a.is_zero() || b.is_zero()) throw CalcError("symbol entries must be nonzero");
            return BrClass(QSymbol(a, b));
        }
        case ExprKind::Add:
        case ExprKind::Sub:  // mod-2: subtraction is addition
            return eval_class(e->lhs) + eval_class(e->rhs);
        case ExprKind::Neg:  // -c = c mod 2
            return eval_class(e->lhs);
        default:
            if (!contains_sym(e)) {
                RatFun s = eval_scalar(e);
                if (s.is_zero()) return BrClass();  // the zero class
                throw CalcError("expected a sum of sym(...) terms, got scalar " + s.str());
            }
            throw CalcError("sym(...) may only be combined with + and -");
    }
}

namespace {

// polynomial in the five form letters with RatFun coefficients
using FormKey = std::array<int, 5>;  // S T R X Y
using FormPoly = std::map<FormKey, RatFun>;

FormPoly fp_const(const RatFun& c) {
    FormPoly p;
    if (!c.is_zero()) p[{0, 0, 0, 0, 0}] = c;
    return p;
}

FormPoly fp_add(const FormPoly& a, const FormPoly& b, int sign) {
    FormPoly out = a;
    for (const auto& [k, c] : b) {
        RatFun next = out.count(k) ? out[k] + (sign > 0 ? c : -c) : (sign > 0 ? c : -c);
        if (next.is_zero())
            out.erase(k);
        else
            out[k] = next;
    }
    return out;
}

FormPoly fp_mul(const FormPoly& a, const FormPoly& b) {
    FormPoly out;
    for (const auto& [k1, c1] : a)
        for (const auto& [k2, c2] : b) {
            FormKey k;
            for (int i = 0; i < 5; ++i) k[i] = k1[i] + k2[i];
            RatFun next = out.count(k) ? out[k] + c1 * c2 : c1 * c2;
            if (next.is_zero())
                out.erase(k);
            else
                out[k] = next;
        }
    return out;
}

FormPoly eval_formpoly(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Num:
        case ExprKind::Imag: return fp_const(eval_scalar(e));
        case ExprKind::VarRef: {
            if (e->var == 'u' || e->var == 'v') return fp_const(eval_scalar(e));
            FormPoly p;
            FormKey k{0, 0, 0, 0, 0};
            std::string letters = "STRXY";
            k[letters.find(e->var)] = 1;
            p[k] = RatFun(1);
            return p;
        }
        case ExprKind::Add: return fp_add(eval_formpoly(e->lhs), eval_formpoly(e->rhs), 1);
        case ExprKind::Sub: return fp_add(eval_formpoly(e->lhs), eval_formpoly(e->rhs), -1);
        case ExprKind::Neg: return fp_add(FormPoly{}, eval_formpoly(e->lhs), -1);
        case ExprKind::Mul: return fp_mul(eval_formpoly(e->lhs), eval_formpoly(e->rhs));
        case ExprKind::Pow: {
            FormPoly acc = fp_const(RatFun(1));
            FormPoly base = eval_formpoly(e->lhs);
            for (unsigned k = 0; k < e->exp; ++k) acc = fp_mul(acc, base);
            return acc;
        }
        case ExprKind::Div: {
            RatFun d = eval_scalar(e->rhs);  // scalar denominators only
            if (d.is_zero()) throw CalcError("division by zero");
            FormPoly num = eval_formpoly(e->lhs);
            for (auto& [k, c] : num) c = c / d;
            return num;
        }
        case ExprKind::Sym: throw CalcError("sym(...) in a quadratic form expression");
    }
    throw InternalError("unhandled expression node");
}

} // namespace

TernaryForm eval_form(const Expr& e) {
    FormPoly p = eval_formpoly(e);
    if (p.empty()) throw CalcError("zero quadratic form");

    bool saw_sr = false, saw_xy = false;
    for (const auto& [k, c] : p) {
        int total = k[0] + k[1] + k[2] + k[3] + k[4];
        if (total != 2)
            throw CalcError("form must be homogeneous quadratic in the coordinates");
        if (k[0] > 0 || k[2] > 0) saw_sr = true;
        if (k[3] > 0 || k[4] > 0) saw_xy = true;
    }
    if (saw_sr && saw_xy)
        throw CalcError("mixed S,T,R and X,Y,T coordinate conventions");

    // slot map: S,T,R -> 0,1,2; X,Y,T -> 0,1,2
    auto slot_degrees = [&](const FormKey& k) {
        std::array<int, 3> d{0, 0, 0};
        if (saw_xy) {
            d[0] = k[3];
            d[1] = k[4];
            d[2] = k[1];
        } else {
            d[0] = k[0];
            d[1] = k[1];
            d[2] = k[2];
        }
        return d;
    };

    Mat3 gram;
    for (auto& row : gram) row.fill(RatFun(0));
    for (const auto& [k, c] : p) {
        auto d = slot_degrees(k);
        int i = -1, j = -1;
        for (int s = 0; s < 3; ++s) {
            if (d[s] == 2) { i = j = s; }
            if (d[s] == 1) { (i < 0 ? i : j) = s; }
        }
        if (i < 0 || j < 0) throw InternalError("bad quadratic monomial");
        if (i == j) {
            gram[i][i] = c;
        } else {
            RatFun half = c / RatFun(2);
            gram[i][j] = half;
            gram[j][i] = half;
        }
    }
    return TernaryForm(gram);
}

RatFun parse_scalar(const std::string& text) { return eval_scalar(parse_expr(text)); }
BrClass parse_class(const std::string& text) { return eval_class(parse_expr(text)); }
TernaryForm parse_form(const std::string& text) { return eval_form(parse_expr(text)); }

ParamCurve parse_curve(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw CalcError("curve must look like v=1-u or u=g(v)");
    std::string lhs = text.substr(0, eq);
    std::string rhs = text.substr(eq + 1);
    while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.back()))) lhs.pop_back();
    std::size_t s = 0;
    while (s < lhs.size() && std::isspace(static_cast<unsigned char>(lhs[s]))) ++s;
    lhs = lhs.substr(s);
    Var replaced;
    if (lhs == "u")
        replaced = Var::U;
    else if (lhs == "v")
        replaced = Var::V;
    else
        throw CalcError("curve left-hand side must be u or v");
    RatFun image = parse_scalar(rhs);
    if (!image.is_polynomial())
        throw CalcError("curve substitution must be polynomial");
    return ParamCurve(other_var(replaced), image.num());
}

std::pair<Var, GaussRat> parse_param_point(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw CalcError("point must look like u=0");
    std::string lhs = text.substr(0, eq);
    while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.back()))) lhs.pop_back();
    std::size_t s = 0;
    while (s < lhs.size() && std::isspace(static_cast<unsigned char>(lhs[s]))) ++s;
    lhs = lhs.substr(s);
    Var var;
    if (lhs == "u")
        var = Var::U;
    else if (lhs == "v")
        var = Var::V;
    else
        throw CalcError("point left-hand side must be u or v");
    return {var, parse_gauss(text.substr(eq + 1))};
}

GaussRat parse_gauss(const std::string& text) {
    RatFun value = parse_scalar(text);
    if (!value.is_constant()) throw CalcError("expected an exact constant, got " + value.str());
    return value.constant_value();
}

} // namespace brauer
