#include "cauchy_jump/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <vector>

#include "cauchy_jump/error.hpp"

namespace cauchy_jump {

using cplx = std::complex<double>;

struct Expression::Node {
    enum class Op { constant, variable, add, sub, mul, div, pow, neg, call };
    Op op;
    cplx value{};
    std::string func;
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Op = Expression::Node::Op;

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Expression::Node>();
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

NodePtr constant(cplx v) {
    auto n = std::make_shared<Expression::Node>();
    n->op = Op::constant;
    n->value = v;
    return n;
}

bool is_known_function(std::string_view name) {
    for (auto f : {"re", "im", "conj", "abs", "sqrt", "exp", "log", "ln", "sin", "cos"})
        if (name == f) return true;
    return false;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse() {
        NodePtr n = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return n;
    }

    bool conjugating = false;

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::parse, "expression \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) +
                                          ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expression() {
        NodePtr n = term();
        for (;;) {
            if (accept('+')) n = make(Op::add, n, term());
            else if (accept('-')) n = make(Op::sub, n, term());
            else return n;
        }
    }

    NodePtr term() {
        NodePtr n = unary();
        for (;;) {
            if (accept('*')) n = make(Op::mul, n, unary());
            else if (accept('/')) n = make(Op::div, n, unary());
            else return n;
        }
    }

    NodePtr unary() {
        if (accept('-')) return make(Op::neg, unary());
        if (accept('+')) return unary();
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (accept('^')) return make(Op::pow, base, unary());
        return base;
    }

    NodePtr primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr n = expression();
            if (!accept(')')) fail("expected ')'");
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (name == "t" || name == "z" || name == "tau") return make(Op::variable);
            if (name == "i") return constant(cplx(0.0, 1.0));
            if (name == "pi") return constant(cplx(3.14159265358979323846, 0.0));
            if (is_known_function(name)) {
                if (!accept('(')) fail("expected '(' after " + name);
                auto n = std::make_shared<Expression::Node>();
                n->op = Op::call;
                n->func = name == "ln" ? "log" : name;
                n->lhs = expression();
                if (!accept(')')) fail("expected ')' to close " + name + "(");
                if (n->func == "re" || n->func == "im" || n->func == "conj" || n->func == "abs") conjugating = true;
                return n;
            }
            pos_ = start;
            fail("unknown identifier '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    NodePtr number() {
        double v = 0.0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc()) fail("malformed number");
        pos_ += static_cast<std::size_t>(ptr - first);
        return constant(cplx(v, 0.0));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

cplx integer_power(cplx base, long n) {
    if (n < 0) return 1.0 / integer_power(base, -n);
    cplx result(1.0, 0.0);
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

cplx evaluate(const Expression::Node& n, cplx z) {
    switch (n.op) {
    case Op::constant: return n.value;
    case Op::variable: return z;
    case Op::add: return evaluate(*n.lhs, z) + evaluate(*n.rhs, z);
    case Op::sub: return evaluate(*n.lhs, z) - evaluate(*n.rhs, z);
    case Op::mul: return evaluate(*n.lhs, z) * evaluate(*n.rhs, z);
    case Op::div: return evaluate(*n.lhs, z) / evaluate(*n.rhs, z);
    case Op::neg: return -evaluate(*n.lhs, z);
    case Op::pow: {
        cplx b = evaluate(*n.lhs, z), e = evaluate(*n.rhs, z);
        if (e.imag() == 0.0 && e.real() == std::round(e.real()) && std::abs(e.real()) <= 1 << 20)
            return integer_power(b, static_cast<long>(e.real()));
        return std::pow(b, e);
    }
    case Op::call: {
        cplx a = evaluate(*n.lhs, z);
        const std::string& f = n.func;
        if (f == "re") return a.real();
        if (f == "im") return a.imag();
        if (f == "conj") return std::conj(a);
        if (f == "abs") return std::abs(a);
        if (f == "sqrt") return std::sqrt(a);
        if (f == "exp") return std::exp(a);
        if (f == "log") return std::log(a);
        if (f == "sin") return std::sin(a);
        if (f == "cos") return std::cos(a);
        break;
    }
    }
    throw Error(ErrorKind::parse, "corrupt expression tree");
}

}  // namespace

Expression Expression::parse(std::string_view text) {
    Parser p(text);
    Expression e;
    e.root_ = p.parse();
    e.text_ = std::string(text);
    e.conjugating_ = p.conjugating;
    return e;
}

cplx Expression::operator()(cplx z) const { return evaluate(*root_, z); }

}  // namespace cauchy_jump
