#include "lattica/dsl.hpp"

#include <cctype>

namespace lattica {
namespace {

struct Token {
    enum class T { Ident, Int, LParen, RParen, Comma, End };
    T t = T::End;
    std::string text;
    long long value = 0;
    int pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        cur_.pos = static_cast<int>(i_);
        if (i_ >= src_.size()) {
            cur_.t = Token::T::End;
            cur_.text = "end of input";
            return;
        }
        char c = src_[i_];
        if (c == '(') { cur_ = {Token::T::LParen, "(", 0, cur_.pos}; ++i_; return; }
        if (c == ')') { cur_ = {Token::T::RParen, ")", 0, cur_.pos}; ++i_; return; }
        if (c == ',') { cur_ = {Token::T::Comma, ",", 0, cur_.pos}; ++i_; return; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            long long v = 0;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) {
                v = v * 10 + (src_[j] - '0');
                if (v > 1000000) throw SyntaxError(cur_.pos, "a smaller number", "number too large");
                ++j;
            }
            cur_ = {Token::T::Int, src_.substr(i_, j - i_), v, cur_.pos};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            cur_ = {Token::T::Ident, src_.substr(i_, j - i_), 0, cur_.pos};
            i_ = j;
            return;
        }
        throw SyntaxError(cur_.pos, "a name, a number, '(', ')' or ','",
                          std::string("unexpected character '") + c + "' at offset " +
                              std::to_string(cur_.pos));
    }

    const std::string& src_;
    size_t i_ = 0;
    Token cur_;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    Expr parse() {
        Expr e = expr();
        if (lex_.peek().t != Token::T::End)
            throw SyntaxError(lex_.peek().pos, "end of input",
                              "trailing input at offset " + std::to_string(lex_.peek().pos));
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& expected) {
        const Token& t = lex_.peek();
        throw SyntaxError(t.pos, expected,
                          "expected " + expected + " but found '" + t.text + "' at offset " +
                              std::to_string(t.pos));
    }

    Expr expr() {
        if (lex_.peek().t != Token::T::Ident) fail("a construction name or keyword");
        Token name = lex_.take();
        Expr e;
        e.pos = name.pos;
        e.name = name.text;
        if (lex_.peek().t != Token::T::LParen) {
            e.kind = Expr::Kind::Word;
            return e;
        }
        lex_.take();  // (
        e.kind = Expr::Kind::Call;
        e.args.push_back(arg());
        while (lex_.peek().t == Token::T::Comma) {
            lex_.take();
            e.args.push_back(arg());
        }
        if (lex_.peek().t != Token::T::RParen) fail("',' or ')'");
        lex_.take();
        return e;
    }

    Expr arg() {
        if (lex_.peek().t == Token::T::Int) {
            Token t = lex_.take();
            Expr e;
            e.kind = Expr::Kind::Int;
            e.value = t.value;
            e.pos = t.pos;
            return e;
        }
        if (lex_.peek().t == Token::T::Ident) return expr();
        fail("a structure expression or a number");
    }

    Lexer lex_;
};

long long int_arg(const Expr& call, size_t i) {
    const Expr& a = call.args[i];
    if (a.kind != Expr::Kind::Int)
        throw EvalError(a.pos, call.name + ": argument " + std::to_string(i + 1) +
                                   " must be a number");
    return a.value;
}

Structure struct_arg(const Expr& call, size_t i) {
    return eval_expr(call.args[i]);
}

StepVariant variant_arg(const Expr& call, size_t i) {
    const Expr& a = call.args[i];
    if (a.kind == Expr::Kind::Word)
        if (auto v = step_variant_from_name(a.name)) return *v;
    throw EvalError(a.pos, call.name + ": argument " + std::to_string(i + 1) +
                               " must be one of kleene, double3, plain");
}

void need_arity(const Expr& call, size_t lo, size_t hi) {
    if (call.args.size() < lo || call.args.size() > hi)
        throw EvalError(call.pos, call.name + ": wrong number of arguments");
}

InvolutionStructure involution_arg(const Expr& call, size_t i, const Structure& s) {
    if (const auto* I = std::get_if<InvolutionStructure>(&s)) return *I;
    throw EvalError(call.args[i].pos,
                    call.name + ": argument " + std::to_string(i + 1) + " needs an involution");
}

}  // namespace

Expr parse_expr(const std::string& text) {
    return Parser(text).parse();
}

Structure eval_expr(const Expr& e) {
    if (e.kind == Expr::Kind::Int)
        throw EvalError(e.pos, "a number cannot stand alone as a structure");
    if (e.kind == Expr::Kind::Word) {
        if (e.name == "unit") return validate_involution(chain(1), {0});
        throw EvalError(e.pos, "unknown keyword '" + e.name + "'");
    }

    const std::string& op = e.name;
    try {
        if (op == "chain") {
            need_arity(e, 1, 1);
            return chain(static_cast<int>(int_arg(e, 0)));
        }
        if (op == "bool") {
            need_arity(e, 1, 1);
            return boolean_algebra(static_cast<int>(int_arg(e, 0)));
        }
        if (op == "m") {
            need_arity(e, 1, 1);
            return m_lattice(static_cast<int>(int_arg(e, 0)));
        }
        if (op == "dual") {
            need_arity(e, 1, 1);
            Structure s = struct_arg(e, 0);
            if (const auto* I = std::get_if<InvolutionStructure>(&s)) return dual(*I);
            return dual(lattice_of(s));
        }
        if (op == "bound") {
            need_arity(e, 1, 1);
            return bound_B(struct_arg(e, 0)).result;
        }
        if (op == "osum") {
            need_arity(e, 2, 2);
            Structure a = struct_arg(e, 0), b = struct_arg(e, 1);
            return ordinal_sum(lattice_of(a), lattice_of(b)).result;
        }
        if (op == "hsum") {
            need_arity(e, 1, static_cast<size_t>(-1));
            std::vector<Structure> parts;
            for (size_t i = 0; i < e.args.size(); ++i) parts.push_back(struct_arg(e, i));
            return horizontal_sum(parts).result;
        }
        if (op == "sandwich") {
            need_arity(e, 2, 2);
            Structure low = struct_arg(e, 0);
            Structure mid = struct_arg(e, 1);
            std::optional<InvolutionStructure> K;
            if (structure_size(mid) > 1 || has_involution(mid))
                K = involution_arg(e, 1, mid);
            return sandwich(lattice_of(low), K);
        }
        if (op == "aol") {
            need_arity(e, 1, 1);
            Structure mid = struct_arg(e, 0);
            return aol_sandwich(involution_arg(e, 0, mid));
        }
        if (op == "step") {
            need_arity(e, 2, 2);
            return step(struct_arg(e, 0), variant_arg(e, 1)).result;
        }
        if (op == "tower") {
            need_arity(e, 3, 3);
            Structure seed = struct_arg(e, 0);
            long long k = int_arg(e, 1);
            StepVariant v = variant_arg(e, 2);
            if (k > 200) throw EvalError(e.args[1].pos, "tower: step count too large");
            TowerFamily F = tower(seed, static_cast<int>(k), v);
            return F.members.back();
        }
    } catch (const EvalError&) {
        throw;
    } catch (const Error& err) {
        throw EvalError(e.pos, op + ": " + err.what());
    }
    throw EvalError(e.pos, "unknown construction '" + op + "'");
}

Structure eval_text(const std::string& text) {
    return eval_expr(parse_expr(text));
}

}  // namespace lattica
