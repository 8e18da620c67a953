#include "polybound/parse.hpp"

#include <cctype>
#include <optional>
#include <utility>

#include "polybound/errors.hpp"

namespace polybound {

namespace {

struct Token {
    enum class Kind { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::size_t pos; // 1-based
    Rat value;       // Num
    std::string text;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto digits = [&](std::string& buf) {
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) buf += s[i++];
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t pos = i + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string ip, fp;
            digits(ip);
            if (i < s.size() && s[i] == '.') {
                ++i;
                digits(fp);
                if (fp.empty()) throw SyntaxError(i + 1, "expected digits after decimal point");
            }
            // exact decimal: shift the fraction digits into the numerator
            Rat v(Int(ip + fp), [&] {
                Int d = 1;
                for (std::size_t k = 0; k < fp.size(); ++k) d *= 10;
                return d;
            }());
            v.canonicalize();
            out.push_back({Token::Kind::Num, pos, v, ip + (fp.empty() ? "" : "." + fp)});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                name += s[i++];
            out.push_back({Token::Kind::Ident, pos, Rat(0), name});
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Kind::Plus; break;
            case '-': k = Token::Kind::Minus; break;
            case '*': k = Token::Kind::Star; break;
            case '/': k = Token::Kind::Slash; break;
            case '^': k = Token::Kind::Caret; break;
            case '(': k = Token::Kind::LParen; break;
            case ')': k = Token::Kind::RParen; break;
            default:
                throw SyntaxError(pos, std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, pos, Rat(0), std::string(1, c)});
        ++i;
    }
    out.push_back({Token::Kind::End, s.size() + 1, Rat(0), ""});
    return out;
}

/// Exact value of a constant subtree; nullopt when a variable occurs.
std::optional<Rat> fold(const ExprAST& e) {
    switch (e.kind) {
        case ExprAST::Kind::Literal: return e.value;
        case ExprAST::Kind::Variable: return std::nullopt;
        case ExprAST::Kind::Negate: {
            auto v = fold(e.kids[0]);
            if (!v) return std::nullopt;
            return -*v;
        }
        case ExprAST::Kind::Power: {
            auto v = fold(e.kids[0]);
            if (!v) return std::nullopt;
            return pow_rat(*v, static_cast<unsigned long>(e.exponent));
        }
        case ExprAST::Kind::Sum:
        case ExprAST::Kind::Product: {
            Rat acc = e.kind == ExprAST::Kind::Sum ? Rat(0) : Rat(1);
            for (const auto& k : e.kids) {
                auto v = fold(k);
                if (!v) return std::nullopt;
                if (e.kind == ExprAST::Kind::Sum)
                    acc += *v;
                else
                    acc *= *v;
            }
            return acc;
        }
    }
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    ExprAST run() {
        ExprAST e = sum();
        if (peek().kind != Token::Kind::End)
            throw SyntaxError(peek().pos, "expected an operator or end of input");
        return e;
    }

private:
    std::vector<Token> toks_;
    std::size_t at_ = 0;

    const Token& peek() const { return toks_[at_]; }
    const Token& take() { return toks_[at_++]; }

    ExprAST sum() {
        ExprAST node = term();
        if (peek().kind != Token::Kind::Plus && peek().kind != Token::Kind::Minus) return node;
        ExprAST s{ExprAST::Kind::Sum, {std::move(node)}, 0, "", Rat(0), toks_[0].pos};
        s.pos = s.kids[0].pos;
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            bool minus = take().kind == Token::Kind::Minus;
            ExprAST rhs = term();
            if (minus) {
                ExprAST n{ExprAST::Kind::Negate, {std::move(rhs)}, 0, "", Rat(0), 0};
                n.pos = n.kids[0].pos;
                s.kids.push_back(std::move(n));
            } else {
                s.kids.push_back(std::move(rhs));
            }
        }
        return s;
    }

    ExprAST term() {
        ExprAST node = factor();
        if (peek().kind != Token::Kind::Star && peek().kind != Token::Kind::Slash) return node;
        ExprAST p{ExprAST::Kind::Product, {std::move(node)}, 0, "", Rat(0), 0};
        p.pos = p.kids[0].pos;
        while (peek().kind == Token::Kind::Star || peek().kind == Token::Kind::Slash) {
            bool divide = take().kind == Token::Kind::Slash;
            ExprAST rhs = factor();
            if (divide) {
                auto v = fold(rhs);
                if (!v) throw NonPolynomial("division by a variable expression");
                if (*v == 0) throw DivisionByZero("constant divisor is zero");
                ExprAST lit{ExprAST::Kind::Literal, {}, 0, "", Rat(1) / *v, rhs.pos};
                p.kids.push_back(std::move(lit));
            } else {
                p.kids.push_back(std::move(rhs));
            }
        }
        return p;
    }

    ExprAST factor() {
        if (peek().kind == Token::Kind::Plus) {
            take();
            return factor();
        }
        if (peek().kind == Token::Kind::Minus) {
            std::size_t pos = take().pos;
            ExprAST n{ExprAST::Kind::Negate, {factor()}, 0, "", Rat(0), pos};
            return n;
        }
        return power();
    }

    ExprAST power() {
        ExprAST base = atom();
        if (peek().kind != Token::Kind::Caret) return base;
        std::size_t cpos = take().pos;
        ExprAST expo = factor(); // right-associative: x^2^3 = x^(2^3)
        auto v = fold(expo);
        if (!v) throw NonPolynomial("exponent is not a constant");
        if (v->get_den() != 1) throw NonPolynomial("fractional exponent " + to_string(*v));
        if (*v < 0) throw NonPolynomial("negative exponent " + to_string(*v));
        if (!v->get_num().fits_sint_p() || v->get_num().get_si() > 100000)
            throw ResourceLimit("exponent at position " + std::to_string(cpos) + " too large");
        ExprAST p{ExprAST::Kind::Power, {std::move(base)},
                  static_cast<int>(v->get_num().get_si()), "", Rat(0), 0};
        p.pos = p.kids[0].pos;
        return p;
    }

    ExprAST atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Num: {
                const Token& n = take();
                return {ExprAST::Kind::Literal, {}, 0, "", n.value, n.pos};
            }
            case Token::Kind::Ident: {
                const Token& n = take();
                return {ExprAST::Kind::Variable, {}, 0, n.text, Rat(0), n.pos};
            }
            case Token::Kind::LParen: {
                take();
                ExprAST inner = sum();
                if (peek().kind != Token::Kind::RParen)
                    throw SyntaxError(peek().pos, "expected ')'");
                take();
                return inner;
            }
            default:
                throw SyntaxError(t.pos, "expected a number, variable or '('");
        }
    }
};

void collect_vars(const ExprAST& e, std::vector<std::string>& names) {
    if (e.kind == ExprAST::Kind::Variable) {
        for (const auto& n : names)
            if (n == e.name) return;
        names.push_back(e.name);
        return;
    }
    for (const auto& k : e.kids) collect_vars(k, names);
}

QPoly to_poly(const ExprAST& e, const RegistryPtr& reg) {
    switch (e.kind) {
        case ExprAST::Kind::Literal: return QPoly::constant(reg, e.value);
        case ExprAST::Kind::Variable:
            for (std::size_t i = 0; i < reg->size(); ++i)
                if ((*reg)[i] == e.name) return QPoly::variable(reg, static_cast<int>(i));
            throw SyntaxError(e.pos, "undeclared variable '" + e.name + "'");
        case ExprAST::Kind::Negate: return -to_poly(e.kids[0], reg);
        case ExprAST::Kind::Power:
            return to_poly(e.kids[0], reg).pow(static_cast<unsigned>(e.exponent));
        case ExprAST::Kind::Sum: {
            QPoly acc(reg);
            for (const auto& k : e.kids) acc += to_poly(k, reg);
            return acc;
        }
        case ExprAST::Kind::Product: {
            QPoly acc = QPoly::constant(reg, Rat(1));
            for (const auto& k : e.kids) acc = acc * to_poly(k, reg);
            return acc;
        }
    }
    throw Error("unreachable expression kind");
}

} // namespace

ExprAST parse_expr(const std::string& text) { return Parser(text).run(); }

QPoly parse_poly(const std::string& text, const std::optional<std::vector<std::string>>& vars) {
    ExprAST ast = parse_expr(text);
    std::vector<std::string> names;
    if (vars)
        names = *vars;
    else
        collect_vars(ast, names);
    return to_poly(ast, make_registry(std::move(names)));
}

Rat parse_rat(const std::string& text) {
    ExprAST ast = parse_expr(text);
    auto v = fold(ast);
    if (!v) throw SyntaxError(ast.pos, "expected a constant");
    return *v;
}

} // namespace polybound
