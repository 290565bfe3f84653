#include "rikitake/parser.hpp"

#include "rikitake/errors.hpp"

#include <cctype>

namespace rikitake {

ParseContext::ParseContext(RingPtr ring, std::map<std::string, Rational> params)
    : ring_(std::move(ring)), params_(std::move(params)) {
    if (!ring_)
        throw std::invalid_argument("null ring");
    for (const auto& [name, value] : params_)
        if (ring_->has(name))
            throw std::invalid_argument("parameter '" + name + "' shadows a ring variable");
}

namespace {

enum class Tok { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text; // Integer digits or Ident name
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        std::size_t start = pos_;
        if (pos_ >= src_.size()) {
            current_ = {Tok::End, start, ""};
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                digits.push_back(src_[pos_++]);
            if (pos_ < src_.size() && src_[pos_] == '.')
                throw ParseError("decimal literals are not supported, use fractions", pos_);
            current_ = {Tok::Integer, start, std::move(digits)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                name.push_back(src_[pos_++]);
            current_ = {Tok::Ident, start, std::move(name)};
            return;
        }
        ++pos_;
        switch (c) {
        case '+': current_ = {Tok::Plus, start, "+"}; return;
        case '-': current_ = {Tok::Minus, start, "-"}; return;
        case '*': current_ = {Tok::Star, start, "*"}; return;
        case '/': current_ = {Tok::Slash, start, "/"}; return;
        case '^': current_ = {Tok::Caret, start, "^"}; return;
        case '(': current_ = {Tok::LParen, start, "("}; return;
        case ')': current_ = {Tok::RParen, start, ")"}; return;
        case '.':
            throw ParseError("decimal literals are not supported, use fractions", start);
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
public:
    Parser(std::string_view src, const ParseContext& ctx) : lex_(src), ctx_(ctx) {}

    RationalFn parse() {
        if (lex_.peek().kind == Tok::End)
            throw ParseError("empty expression", 0);
        RationalFn value = sum();
        if (lex_.peek().kind != Tok::End)
            throw ParseError("unexpected token '" + lex_.peek().text + "'", lex_.peek().offset);
        return value;
    }

private:
    RationalFn sum() {
        RationalFn value = product();
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            Tok op = lex_.take().kind;
            RationalFn rhs = product();
            value = op == Tok::Plus ? value + rhs : value - rhs;
        }
        return value;
    }

    RationalFn product() {
        RationalFn value = unary();
        while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
            Token op = lex_.take();
            RationalFn rhs = unary();
            if (op.kind == Tok::Star) {
                value = value * rhs;
            } else {
                if (rhs.is_zero())
                    throw ParseError("division by an identically zero expression", op.offset);
                value = value / rhs;
            }
        }
        return value;
    }

    RationalFn unary() {
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            return -unary();
        }
        return power();
    }

    RationalFn power() {
        RationalFn base = atom();
        if (lex_.peek().kind == Tok::Caret) {
            lex_.take();
            const Token& t = lex_.peek();
            if (t.kind != Tok::Integer)
                throw ParseError("expected nonnegative integer exponent", t.offset);
            Token exp = lex_.take();
            if (exp.text.size() > 4)
                throw ParseError("exponent too large", exp.offset);
            return base.pow(static_cast<unsigned>(std::stoul(exp.text)));
        }
        return base;
    }

    RationalFn atom() {
        const Token& t = lex_.peek();
        switch (t.kind) {
        case Tok::Integer: {
            Token lit = lex_.take();
            return RationalFn::constant(ctx_.ring(), Rational(BigInt(lit.text)));
        }
        case Tok::Ident: {
            Token id = lex_.take();
            if (auto idx = ctx_.ring()->index_of(id.text))
                return RationalFn(MultiPoly::variable(ctx_.ring(), *idx));
            auto it = ctx_.params().find(id.text);
            if (it != ctx_.params().end())
                return RationalFn::constant(ctx_.ring(), it->second);
            throw ParseError("unknown identifier '" + id.text + "'", id.offset);
        }
        case Tok::LParen: {
            lex_.take();
            RationalFn value = sum();
            if (lex_.peek().kind != Tok::RParen)
                throw ParseError("expected ')'", lex_.peek().offset);
            lex_.take();
            return value;
        }
        case Tok::End:
            throw ParseError("unexpected end of input", t.offset);
        default:
            throw ParseError("unexpected token '" + t.text + "'", t.offset);
        }
    }

    Lexer lex_;
    const ParseContext& ctx_;
};

} // namespace

RationalFn parse_expr(std::string_view src, const ParseContext& ctx) {
    return Parser(src, ctx).parse();
}

MultiPoly parse_poly(std::string_view src, const ParseContext& ctx) {
    RationalFn r = parse_expr(src, ctx);
    if (!r.is_polynomial())
        throw ParseError("non-polynomial result (non-constant denominator)", 0);
    return r.num();
}

} // namespace rikitake
