#include "bicard/dsl.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace bicard::dsl {

namespace {

struct Token {
    enum class Kind { Ident, Int, Plus, CmpOp, LParen, RParen, End } kind;
    std::string text;
    long value = 0;
    CmpOp op = CmpOp::Eq;
    int line = 1;
    int col = 1;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Token t) {
        t.line = line;
        t.col = col;
        out.push_back(std::move(t));
    };
    while (i < src.size()) {
        char ch = src[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++col;
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            Token t{Token::Kind::Int, src.substr(i, j - i)};
            t.value = std::stol(t.text);
            push(std::move(t));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            push({Token::Kind::Ident, src.substr(i, j - i)});
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        auto two = src.substr(i, 2);
        Token t{Token::Kind::CmpOp, ""};
        if (two == "!=" || two == "<=" || two == ">=") {
            t.text = two;
            t.op = two == "!=" ? CmpOp::Ne : (two == "<=" ? CmpOp::Le : CmpOp::Ge);
            push(std::move(t));
            col += 2;
            i += 2;
            continue;
        }
        switch (ch) {
            case '+': push({Token::Kind::Plus, "+"}); break;
            case '(': push({Token::Kind::LParen, "("}); break;
            case ')': push({Token::Kind::RParen, ")"}); break;
            case '=':
                t.text = "=";
                t.op = CmpOp::Eq;
                push(std::move(t));
                break;
            case '<':
                t.text = "<";
                t.op = CmpOp::Lt;
                push(std::move(t));
                break;
            case '>':
                t.text = ">";
                t.op = CmpOp::Gt;
                push(std::move(t));
                break;
            default:
                throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
        }
        ++col;
        ++i;
    }
    Token end{Token::Kind::End, ""};
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

const char* kVariables[] = {"a", "b", "c", "d", "n", "x", "y", "sd", "csd"};

bool is_variable(const std::string& name) {
    for (const char* v : kVariables)
        if (name == v) return true;
    return false;
}

bool is_keyword(const std::string& name) {
    return name == "and" || name == "or" || name == "not" || name == "omega";
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    NodePtr parse() {
        NodePtr e = parse_or();
        expect_end();
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw ParseError(msg, t.line, t.col);
    }
    void expect_end() {
        if (peek().kind != Token::Kind::End) fail("trailing input after expression");
    }

    NodePtr parse_or() {
        std::vector<NodePtr> kids{parse_and()};
        while (peek().kind == Token::Kind::Ident && peek().text == "or") {
            advance();
            kids.push_back(parse_and());
        }
        if (kids.size() == 1) return kids[0];
        auto node = std::make_shared<Node>();
        node->kind = Node::Kind::Or;
        node->kids = std::move(kids);
        return node;
    }

    NodePtr parse_and() {
        std::vector<NodePtr> kids{parse_not()};
        while (peek().kind == Token::Kind::Ident && peek().text == "and") {
            advance();
            kids.push_back(parse_not());
        }
        if (kids.size() == 1) return kids[0];
        auto node = std::make_shared<Node>();
        node->kind = Node::Kind::And;
        node->kids = std::move(kids);
        return node;
    }

    NodePtr parse_not() {
        if (peek().kind == Token::Kind::Ident && peek().text == "not") {
            advance();
            auto node = std::make_shared<Node>();
            node->kind = Node::Kind::Not;
            node->kids = {parse_not()};
            return node;
        }
        return parse_primary();
    }

    // A primary is either a comparison or a parenthesized boolean expression.
    // '(' is ambiguous between the two, so try the comparison reading first
    // and fall back; the input is tiny, backtracking is cheap.
    NodePtr parse_primary() {
        std::size_t save = pos_;
        try {
            return parse_comparison();
        } catch (const ParseError&) {
            if (toks_[save].kind != Token::Kind::LParen) throw;
            pos_ = save;
        }
        advance();  // '('
        NodePtr inner = parse_or();
        if (peek().kind != Token::Kind::RParen) fail("expected ')'");
        advance();
        return inner;
    }

    NodePtr parse_comparison() {
        Term lhs = parse_sum();
        if (peek().kind != Token::Kind::CmpOp) fail("expected comparison operator");
        CmpOp op = advance().op;
        Term rhs = parse_sum();
        auto node = std::make_shared<Node>();
        node->kind = Node::Kind::Cmp;
        node->lhs = std::move(lhs);
        node->op = op;
        node->rhs = std::move(rhs);
        return node;
    }

    Term parse_sum() {
        Term t;
        append_atoms(t);
        while (peek().kind == Token::Kind::Plus) {
            advance();
            append_atoms(t);
        }
        return t;
    }

    // One summand: a single atom, or a parenthesized sum spliced in
    // ('+' is associative, so grouping carries no structure).
    void append_atoms(Term& t) {
        if (peek().kind == Token::Kind::LParen) {
            advance();
            Term inner = parse_sum();
            if (peek().kind != Token::Kind::RParen) fail("expected ')'");
            advance();
            for (const Atom& a : inner.atoms) t.atoms.push_back(a);
            return;
        }
        t.atoms.push_back(parse_atom());
    }

    Atom parse_atom() {
        const Token& t = peek();
        if (t.kind == Token::Kind::Int) {
            advance();
            Atom a;
            a.kind = Atom::Kind::Lit;
            a.value = t.value;
            return a;
        }
        if (t.kind == Token::Kind::Ident) {
            if (t.text == "omega") {
                advance();
                Atom a;
                a.kind = Atom::Kind::Omega;
                return a;
            }
            if (is_variable(t.text)) {
                advance();
                Atom a;
                a.kind = Atom::Kind::Var;
                a.name = t.text;
                return a;
            }
            if (is_keyword(t.text)) fail("expected arithmetic term, found '" + t.text + "'");
            fail("unknown identifier '" + t.text + "'");
        }
        fail("expected arithmetic term");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// Extended natural number: a count or omega.
struct Val {
    bool omega = false;
    long v = 0;
};

Val eval_atom(const Atom& a, const PairType& t) {
    switch (a.kind) {
        case Atom::Kind::Lit: return {false, a.value};
        case Atom::Kind::Omega: return {true, 0};
        case Atom::Kind::Var:
            if (a.name == "a") return {false, t.a};
            if (a.name == "b") return {false, t.b};
            if (a.name == "c") return {false, t.c};
            if (a.name == "d") return {false, t.d};
            if (a.name == "n") return {false, t.n()};
            if (a.name == "x") return {false, t.x()};
            if (a.name == "y") return {false, t.y()};
            if (a.name == "sd") return {false, t.sd()};
            if (a.name == "csd") return {false, t.csd()};
            throw error("unknown variable: " + a.name);
    }
    throw error("bad atom");
}

Val eval_term(const Term& term, const PairType& t) {
    Val out{false, 0};
    for (const Atom& a : term.atoms) {
        Val v = eval_atom(a, t);
        out.omega = out.omega || v.omega;
        out.v += v.v;
    }
    return out;
}

int compare(const Val& a, const Val& b) {
    if (a.omega && b.omega) return 0;
    if (a.omega) return 1;
    if (b.omega) return -1;
    return a.v < b.v ? -1 : (a.v > b.v ? 1 : 0);
}

bool eval_node(const NodePtr& node, const PairType& t) {
    switch (node->kind) {
        case Node::Kind::Cmp: {
            int c = compare(eval_term(node->lhs, t), eval_term(node->rhs, t));
            switch (node->op) {
                case CmpOp::Eq: return c == 0;
                case CmpOp::Ne: return c != 0;
                case CmpOp::Lt: return c < 0;
                case CmpOp::Le: return c <= 0;
                case CmpOp::Gt: return c > 0;
                case CmpOp::Ge: return c >= 0;
            }
            return false;
        }
        case Node::Kind::And:
            for (const auto& k : node->kids)
                if (!eval_node(k, t)) return false;
            return true;
        case Node::Kind::Or:
            for (const auto& k : node->kids)
                if (eval_node(k, t)) return true;
            return false;
        case Node::Kind::Not: return !eval_node(node->kids[0], t);
    }
    return false;
}

std::string op_str(CmpOp op) {
    switch (op) {
        case CmpOp::Eq: return "=";
        case CmpOp::Ne: return "!=";
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Gt: return ">";
        case CmpOp::Ge: return ">=";
    }
    return "?";
}

std::string print_term(const Term& term) {
    std::ostringstream os;
    for (std::size_t i = 0; i < term.atoms.size(); ++i) {
        if (i) os << " + ";
        const Atom& a = term.atoms[i];
        switch (a.kind) {
            case Atom::Kind::Lit: os << a.value; break;
            case Atom::Kind::Omega: os << "omega"; break;
            case Atom::Kind::Var: os << a.name; break;
        }
    }
    return os.str();
}

std::string print_node(const NodePtr& node) {
    switch (node->kind) {
        case Node::Kind::Cmp:
            return print_term(node->lhs) + " " + op_str(node->op) + " " + print_term(node->rhs);
        case Node::Kind::Not: {
            const NodePtr& k = node->kids[0];
            std::string inner = print_node(k);
            if (k->kind == Node::Kind::And || k->kind == Node::Kind::Or)
                inner = "(" + inner + ")";
            return "not " + inner;
        }
        case Node::Kind::And: {
            std::ostringstream os;
            for (std::size_t i = 0; i < node->kids.size(); ++i) {
                if (i) os << " and ";
                std::string inner = print_node(node->kids[i]);
                if (node->kids[i]->kind == Node::Kind::Or) inner = "(" + inner + ")";
                os << inner;
            }
            return os.str();
        }
        case Node::Kind::Or: {
            std::ostringstream os;
            for (std::size_t i = 0; i < node->kids.size(); ++i) {
                if (i) os << " or ";
                os << print_node(node->kids[i]);
            }
            return os.str();
        }
    }
    return "?";
}

}  // namespace

std::string print(const NodePtr& node) { return print_node(node); }

bool equal(const NodePtr& a, const NodePtr& b) {
    if (a->kind != b->kind) return false;
    if (a->kind == Node::Kind::Cmp)
        return a->op == b->op && a->lhs == b->lhs && a->rhs == b->rhs;
    if (a->kids.size() != b->kids.size()) return false;
    for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!equal(a->kids[i], b->kids[i])) return false;
    return true;
}

Expression Expression::parse(const std::string& source) {
    Parser p(lex(source));
    return Expression(p.parse());
}

std::string Expression::print() const { return print_node(root_); }

bool Expression::evaluate(const PairType& t) const { return eval_node(root_, t); }

CompileOutcome compile(const Expression& expr, int n) {
    std::vector<PairType> accepted;
    for (const PairType& t : orbit_types(n))
        if (expr.evaluate(t)) accepted.push_back(t);
    CompileOutcome out;
    out.report = validate(accepted, n);
    if (out.report.ok()) out.relation = InvariantRelation::from_types(n, accepted);
    return out;
}

RelFile parse_rel(const std::string& content) {
    std::istringstream is(content);
    RelFile out;
    std::string line;
    std::ostringstream body;
    while (std::getline(is, line)) {
        std::size_t first = line.find_first_not_of(" \t");
        if (first != std::string::npos && line[first] == '#') {
            std::string comment = line.substr(first + 1);
            std::size_t colon = comment.find(':');
            if (colon != std::string::npos) {
                std::string key = comment.substr(0, colon);
                key.erase(0, key.find_first_not_of(" \t"));
                key.erase(key.find_last_not_of(" \t") + 1);
                if (key == "name") {
                    std::string val = comment.substr(colon + 1);
                    val.erase(0, val.find_first_not_of(" \t"));
                    val.erase(val.find_last_not_of(" \t") + 1);
                    out.name = val;
                }
            }
            continue;
        }
        body << line << '\n';
    }
    out.source = body.str();
    // Ensure the body parses; surface positioned errors right away.
    Expression::parse(out.source);
    return out;
}

RelFile load_rel_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open relation file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_rel(ss.str());
}

}  // namespace bicard::dsl
