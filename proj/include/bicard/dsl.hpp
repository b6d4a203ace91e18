#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bicard/relation.hpp"

namespace bicard::dsl {

struct ParseError : error {
    ParseError(const std::string& msg, int line_, int col_)
        : error(msg + " at line " + std::to_string(line_) + ", column " + std::to_string(col_)),
          line(line_),
          col(col_) {}
    int line;
    int col;
};

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

/// One arithmetic atom: a region-count variable, a literal, or omega.
struct Atom {
    enum class Kind { Var, Lit, Omega } kind = Kind::Lit;
    std::string name;  // for Var
    long value = 0;    // for Lit
    bool operator==(const Atom&) const = default;
};

/// A sum of atoms ('+' is the only arithmetic operator).
struct Term {
    std::vector<Atom> atoms;
    bool operator==(const Term&) const = default;
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum class Kind { Cmp, And, Or, Not } kind = Kind::Cmp;
    // Cmp
    Term lhs, rhs;
    CmpOp op = CmpOp::Eq;
    // And / Or (flattened, size >= 2); Not (size == 1)
    std::vector<NodePtr> kids;
};

bool equal(const NodePtr& a, const NodePtr& b);

/// Render a predicate tree back to source with minimal parentheses.
std::string print(const NodePtr& node);

/// A predicate over pair types, written in the little relation language.
/// Variables: a b c d n x y sd csd; literals; omega; + = != < <= > >= and or not ().
class Expression {
public:
    static Expression parse(const std::string& source);

    std::string print() const;
    bool evaluate(const PairType& t) const;
    const NodePtr& root() const { return root_; }

    bool operator==(const Expression& o) const { return equal(root_, o.root_); }

private:
    explicit Expression(NodePtr root) : root_(std::move(root)) {}
    NodePtr root_;
};

struct CompileOutcome {
    std::optional<InvariantRelation> relation;
    ValidationReport report;
    bool ok() const { return relation.has_value(); }
};

/// Evaluate the predicate at every pair type over n and check that the
/// accepted set is an invariant equivalence relation.
CompileOutcome compile(const Expression& expr, int n);

/// A .rel document: optional "# name: ..." header comments, then one expression.
struct RelFile {
    std::string name;
    std::string source;
};

RelFile parse_rel(const std::string& content);
RelFile load_rel_file(const std::string& path);

}  // namespace bicard::dsl
