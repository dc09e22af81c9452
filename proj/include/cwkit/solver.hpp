#ifndef CWKIT_SOLVER_HPP
#define CWKIT_SOLVER_HPP

#include <limits>

#include "cwkit/cwexpr.hpp"
#include "cwkit/graph.hpp"

namespace cwkit {

struct Budget {
    double seconds = std::numeric_limits<double>::infinity();
    long long max_nodes = 10'000'000;
};

struct SearchStats {
    long long nodes = 0;
    double seconds = 0.0;
    bool exhausted = false;
};

enum class Answer { Yes, No, Unknown };

struct DecideResult {
    Answer answer = Answer::Unknown;
    CwExprPtr certificate;  // present iff answer == Yes; already checked
    SearchStats stats;
};

/// Is there a linear w-expression for g? Complete search over normalized
/// states (placed set, label classes). "No" is a verified lower bound w+1.
DecideResult lcwd_decide(const Graph& g, int w, Budget budget = {});

/// Is there a (tree) w-expression for g? Bottom-up DP over
/// (vertex subset, label partition) under edges-complete normalization.
DecideResult cwd_decide(const Graph& g, int w, Budget budget = {});

/// Independent oracles: brute-force enumeration of expressions with
/// explicit realized-edge tracking and no normalization assumptions.
bool naive_lcwd_decide(const Graph& g, int w);  // n <= 7
int naive_lcwd(const Graph& g);                 // n <= 7
bool naive_cwd_decide(const Graph& g, int w);   // n <= 5
int naive_cwd(const Graph& g);                  // n <= 5

struct WidthResult {
    enum class Kind { Exact, LowerBound, UpperBound, Unknown };
    Kind kind = Kind::Unknown;
    int value = 0;  // exact value, or the bound named by kind
    int lower = 1;  // best verified lower bound
    int upper = 0;  // best verified upper bound; 0 = none yet
    CwExprPtr certificate;  // witnesses 'upper' when present
    SearchStats stats;
};

WidthResult lcwd_exact(const Graph& g, Budget budget = {});
WidthResult cwd_exact(const Graph& g, Budget budget = {});

}  // namespace cwkit

#endif
