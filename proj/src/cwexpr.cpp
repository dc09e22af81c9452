#include "cwkit/cwexpr.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace cwkit {

CwExprPtr make_vertex(int label, std::string name) {
    if (label < 1) throw eval_error("label must be positive");
    return std::make_unique<CwExpr>(CwExpr{CwExpr::Make{label, std::move(name)}});
}

CwExprPtr make_union(CwExprPtr left, CwExprPtr right) {
    return std::make_unique<CwExpr>(CwExpr{CwExpr::Union{std::move(left), std::move(right)}});
}

CwExprPtr add_edges(int i, int j, CwExprPtr child) {
    if (i == j) throw eval_error("eta needs two distinct labels");
    if (i < 1 || j < 1) throw eval_error("label must be positive");
    return std::make_unique<CwExpr>(CwExpr{CwExpr::AddEdges{i, j, std::move(child)}});
}

CwExprPtr relabel(int from, int to, CwExprPtr child) {
    if (from == to) throw eval_error("rho needs two distinct labels");
    if (from < 1 || to < 1) throw eval_error("label must be positive");
    return std::make_unique<CwExpr>(CwExpr{CwExpr::Relabel{from, to, std::move(child)}});
}

CwExprPtr clone(const CwExpr& e) {
    if (auto* m = std::get_if<CwExpr::Make>(&e.node)) return make_vertex(m->label, m->name);
    if (auto* u = std::get_if<CwExpr::Union>(&e.node)) return make_union(clone(*u->left), clone(*u->right));
    if (auto* a = std::get_if<CwExpr::AddEdges>(&e.node)) return add_edges(a->i, a->j, clone(*a->child));
    auto& r = std::get<CwExpr::Relabel>(e.node);
    return relabel(r.from, r.to, clone(*r.child));
}

bool expr_equal(const CwExpr& a, const CwExpr& b) {
    if (a.node.index() != b.node.index()) return false;
    if (auto* m = std::get_if<CwExpr::Make>(&a.node)) {
        auto& n = std::get<CwExpr::Make>(b.node);
        return m->label == n.label && m->name == n.name;
    }
    if (auto* u = std::get_if<CwExpr::Union>(&a.node)) {
        auto& v = std::get<CwExpr::Union>(b.node);
        return expr_equal(*u->left, *v.left) && expr_equal(*u->right, *v.right);
    }
    if (auto* x = std::get_if<CwExpr::AddEdges>(&a.node)) {
        auto& y = std::get<CwExpr::AddEdges>(b.node);
        return x->i == y.i && x->j == y.j && expr_equal(*x->child, *y.child);
    }
    auto& x = std::get<CwExpr::Relabel>(a.node);
    auto& y = std::get<CwExpr::Relabel>(b.node);
    return x.from == y.from && x.to == y.to && expr_equal(*x.child, *y.child);
}

namespace {

LabeledGraph eval_rec(const CwExpr& e, std::set<std::string>& names) {
    if (auto* m = std::get_if<CwExpr::Make>(&e.node)) {
        if (m->label < 1) throw eval_error("label must be positive");
        if (!m->name.empty() && !names.insert(m->name).second)
            throw eval_error("duplicate vertex name '" + m->name + "'");
        Graph g(1);
        if (!m->name.empty()) g.set_name(1, m->name);
        return {std::move(g), {m->label}};
    }
    if (auto* u = std::get_if<CwExpr::Union>(&e.node)) {
        LabeledGraph a = eval_rec(*u->left, names);
        LabeledGraph b = eval_rec(*u->right, names);
        LabeledGraph out{disjoint_union(a.graph, b.graph), a.labels};
        out.labels.insert(out.labels.end(), b.labels.begin(), b.labels.end());
        return out;
    }
    if (auto* a = std::get_if<CwExpr::AddEdges>(&e.node)) {
        if (a->i == a->j) throw eval_error("eta needs two distinct labels");
        LabeledGraph lg = eval_rec(*a->child, names);
        int n = lg.graph.n();
        for (int u = 1; u <= n; ++u) {
            if (lg.labels[u - 1] != a->i) continue;
            for (int v = 1; v <= n; ++v)
                if (lg.labels[v - 1] == a->j) lg.graph.add_edge(u, v);
        }
        return lg;
    }
    auto& r = std::get<CwExpr::Relabel>(e.node);
    if (r.from == r.to) throw eval_error("rho needs two distinct labels");
    LabeledGraph lg = eval_rec(*r.child, names);
    for (int& l : lg.labels)
        if (l == r.from) l = r.to;
    return lg;
}

}  // namespace

LabeledGraph evaluate(const CwExpr& e) {
    std::set<std::string> names;
    return eval_rec(e, names);
}

namespace {

void collect_labels(const CwExpr& e, std::set<int>& out) {
    if (auto* m = std::get_if<CwExpr::Make>(&e.node)) {
        out.insert(m->label);
    } else if (auto* u = std::get_if<CwExpr::Union>(&e.node)) {
        collect_labels(*u->left, out);
        collect_labels(*u->right, out);
    } else if (auto* a = std::get_if<CwExpr::AddEdges>(&e.node)) {
        out.insert(a->i);
        out.insert(a->j);
        collect_labels(*a->child, out);
    } else {
        auto& r = std::get<CwExpr::Relabel>(e.node);
        out.insert(r.from);
        out.insert(r.to);
        collect_labels(*r.child, out);
    }
}

int count_makes(const CwExpr& e, bool& linear) {
    if (std::holds_alternative<CwExpr::Make>(e.node)) return 1;
    if (auto* u = std::get_if<CwExpr::Union>(&e.node)) {
        int l = count_makes(*u->left, linear);
        int r = count_makes(*u->right, linear);
        if (r != 1) linear = false;
        return l + r;
    }
    if (auto* a = std::get_if<CwExpr::AddEdges>(&e.node)) return count_makes(*a->child, linear);
    return count_makes(*std::get<CwExpr::Relabel>(e.node).child, linear);
}

}  // namespace

int width(const CwExpr& e) {
    std::set<int> labels;
    collect_labels(e, labels);
    return static_cast<int>(labels.size());
}

bool is_linear(const CwExpr& e) {
    bool linear = true;
    count_makes(e, linear);
    return linear;
}

// ---------------------------------------------------------------------------
// text format

namespace {

struct Parser {
    std::string_view text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(line, col, msg); }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_ws() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '#') {
                while (pos < text.size() && text[pos] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    void expect_word(std::string_view w) {
        skip_ws();
        for (char c : w) {
            if (pos >= text.size() || text[pos] != c) fail("expected '" + std::string(w) + "'");
            advance();
        }
    }

    int parse_int() {
        skip_ws();
        if (pos >= text.size() || !isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a label (positive integer)");
        long v = 0;
        while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000) fail("label too large");
            advance();
        }
        if (v < 1) fail("label 0 is not allowed");
        return static_cast<int>(v);
    }

    static bool ident_char(char c) {
        return isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '^' || c == '+' || c == '-' || c == '*';
    }

    std::string parse_ident() {
        skip_ws();
        if (pos >= text.size() || !isalpha(static_cast<unsigned char>(text[pos]))) fail("expected a vertex name");
        std::string out;
        while (pos < text.size() && ident_char(text[pos])) {
            out.push_back(text[pos]);
            advance();
        }
        return out;
    }

    CwExprPtr parse() {
        skip_ws();
        if (pos >= text.size()) fail("expected an expression");
        char c = text[pos];
        if (c == '(') {
            advance();
            CwExprPtr l = parse();
            expect('+');
            CwExprPtr r = parse();
            expect(')');
            return make_union(std::move(l), std::move(r));
        }
        if (c == 'v' && pos + 1 < text.size() && text[pos + 1] == '(') {
            advance();
            advance();
            int label = parse_int();
            expect(',');
            std::string name = parse_ident();
            expect(')');
            return make_vertex(label, std::move(name));
        }
        if (text.compare(pos, 4, "eta(") == 0) {
            for (int k = 0; k < 4; ++k) advance();
            int i = parse_int();
            expect(',');
            int j = parse_int();
            expect(')');
            expect('{');
            CwExprPtr child = parse();
            expect('}');
            if (i == j) fail("eta needs two distinct labels");
            return add_edges(i, j, std::move(child));
        }
        if (text.compare(pos, 4, "rho(") == 0) {
            for (int k = 0; k < 4; ++k) advance();
            int from = parse_int();
            expect_word("->");
            int to = parse_int();
            expect(')');
            expect('{');
            CwExprPtr child = parse();
            expect('}');
            if (from == to) fail("rho needs two distinct labels");
            return relabel(from, to, std::move(child));
        }
        fail("expected one of v(...), (..+..), eta(..){..}, rho(..){..}");
    }
};

void print_rec(const CwExpr& e, std::ostringstream& out) {
    if (auto* m = std::get_if<CwExpr::Make>(&e.node)) {
        out << "v(" << m->label << "," << m->name << ")";
    } else if (auto* u = std::get_if<CwExpr::Union>(&e.node)) {
        out << "(";
        print_rec(*u->left, out);
        out << " + ";
        print_rec(*u->right, out);
        out << ")";
    } else if (auto* a = std::get_if<CwExpr::AddEdges>(&e.node)) {
        out << "eta(" << a->i << "," << a->j << "){";
        print_rec(*a->child, out);
        out << "}";
    } else {
        auto& r = std::get<CwExpr::Relabel>(e.node);
        out << "rho(" << r.from << "->" << r.to << "){";
        print_rec(*r.child, out);
        out << "}";
    }
}

}  // namespace

namespace {

void collect_names(const CwExpr& e, std::set<std::string>& seen, std::string& dup) {
    if (auto* m = std::get_if<CwExpr::Make>(&e.node)) {
        if (!m->name.empty() && !seen.insert(m->name).second && dup.empty()) dup = m->name;
    } else if (auto* u = std::get_if<CwExpr::Union>(&e.node)) {
        collect_names(*u->left, seen, dup);
        collect_names(*u->right, seen, dup);
    } else if (auto* a = std::get_if<CwExpr::AddEdges>(&e.node)) {
        collect_names(*a->child, seen, dup);
    } else {
        collect_names(*std::get<CwExpr::Relabel>(e.node).child, seen, dup);
    }
}

}  // namespace

CwExprPtr parse_expr(std::string_view text) {
    Parser p{text};
    CwExprPtr e = p.parse();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input after expression");
    std::set<std::string> seen;
    std::string dup;
    collect_names(*e, seen, dup);
    if (!dup.empty()) throw parse_error(p.line, p.col, "duplicate vertex name '" + dup + "'");
    return e;
}

CwExprPtr parse_expr_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw graph_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_expr(buf.str());
}

std::string print_expr(const CwExpr& e) {
    std::ostringstream out;
    print_rec(e, out);
    return out.str();
}

CheckReport check_certificate(const CwExpr& e, const Graph& g, int w, bool linear) {
    int wd = width(e);
    if (wd > w)
        return {false, "expression uses " + std::to_string(wd) + " labels, limit is " + std::to_string(w)};
    if (linear && !is_linear(e)) return {false, "expression is not linear"};
    LabeledGraph val;
    try {
        val = evaluate(e);
    } catch (const eval_error& err) {
        return {false, std::string("evaluation failed: ") + err.what()};
    }
    const Graph& h = val.graph;
    if (h.n() != g.n())
        return {false, "vertex counts differ: expression builds " + std::to_string(h.n()) + ", graph has " + std::to_string(g.n())};
    // name-respecting comparison when both sides carry the same full name set
    bool named = true;
    std::set<std::string> names_g, names_h;
    for (int v = 1; v <= g.n(); ++v) {
        if (g.name(v).empty() || h.name(v).empty()) {
            named = false;
            break;
        }
        names_g.insert(g.name(v));
        names_h.insert(h.name(v));
    }
    if (named && names_g == names_h) {
        for (int u = 1; u <= h.n(); ++u)
            for (int v = u + 1; v <= h.n(); ++v) {
                int gu = g.id_by_name(h.name(u));
                int gv = g.id_by_name(h.name(v));
                if (h.adjacent(u, v) != g.adjacent(gu, gv))
                    return {false, "edge mismatch on pair {" + h.name(u) + "," + h.name(v) + "}"};
            }
        return {true, ""};
    }
    if (!is_isomorphic(h, g)) return {false, "evaluated graph is not isomorphic to the target"};
    return {true, ""};
}

}  // namespace cwkit
