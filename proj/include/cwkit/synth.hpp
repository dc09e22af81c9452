#ifndef CWKIT_SYNTH_HPP
#define CWKIT_SYNTH_HPP

#include <vector>

#include "cwkit/cwexpr.hpp"
#include "cwkit/graph.hpp"
#include "cwkit/solver.hpp"

namespace cwkit {

/// Insertion order; a permutation of 1..n.
using Ordering = std::vector<int>;

Ordering ordering_by_names(const Graph& g, const std::vector<std::string>& names);

/// Linear expression from an insertion order: each vertex enters with a fresh
/// label, edges to its placed neighbors are added immediately, and classes
/// with equal future neighborhoods are merged at once. Always succeeds; the
/// result evaluates to exactly g (names included).
CwExprPtr eager_expression(const Graph& g, const Ordering& order);

struct SynthResult {
    CwExprPtr certificate;   // present iff found; checked
    bool found = false;
    bool exhausted = false;  // move space exhausted without a certificate
    long long nodes = 0;
};

/// Searches insertion orders together with label-class choices (memoized on
/// placed-set + class partition) for a linear certificate of width <= w;
/// falls back to a beam search when the budget runs out. A miss is never
/// reported as a lower bound.
SynthResult search_certificate(const Graph& g, int w, Budget budget = {});

}  // namespace cwkit

#endif
