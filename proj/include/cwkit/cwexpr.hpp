#ifndef CWKIT_CWEXPR_HPP
#define CWKIT_CWEXPR_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cwkit/graph.hpp"

namespace cwkit {

struct CwExpr;
using CwExprPtr = std::unique_ptr<CwExpr>;

/// Term of the clique-width algebra. Labels are positive integers.
struct CwExpr {
    struct Make {
        int label;
        std::string name;
    };
    struct Union {
        CwExprPtr left, right;
    };
    struct AddEdges {
        int i, j;  // i != j; connects every i-labeled / j-labeled pair
        CwExprPtr child;
    };
    struct Relabel {
        int from, to;  // from != to; moves all from-labeled vertices to 'to'
        CwExprPtr child;
    };
    std::variant<Make, Union, AddEdges, Relabel> node;
};

CwExprPtr make_vertex(int label, std::string name);
CwExprPtr make_union(CwExprPtr left, CwExprPtr right);
CwExprPtr add_edges(int i, int j, CwExprPtr child);
CwExprPtr relabel(int from, int to, CwExprPtr child);
CwExprPtr clone(const CwExpr& e);
bool expr_equal(const CwExpr& a, const CwExpr& b);

class eval_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation result: the built graph plus the label of each vertex.
struct LabeledGraph {
    Graph graph;
    std::vector<int> labels;  // labels[v-1]
};

LabeledGraph evaluate(const CwExpr& e);

/// Number of distinct labels occurring anywhere in the term.
int width(const CwExpr& e);

/// True iff every union's right operand inserts exactly one vertex.
bool is_linear(const CwExpr& e);

CwExprPtr parse_expr(std::string_view text);
CwExprPtr parse_expr_file(const std::string& path);
std::string print_expr(const CwExpr& e);

struct CheckReport {
    bool ok;
    std::string reason;  // empty when ok
};

/// Does e witness "width <= w" (linear if requested) for G? Compares by
/// names when both sides are fully and identically named, otherwise by
/// isomorphism.
CheckReport check_certificate(const CwExpr& e, const Graph& g, int w, bool linear);

}  // namespace cwkit

#endif
