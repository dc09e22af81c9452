#ifndef CWKIT_FAMILIES_HPP
#define CWKIT_FAMILIES_HPP

#include <string>

#include "cwkit/graph.hpp"

namespace cwkit {

/// k-path power on n vertices named x1..xn: xi ~ xj iff 0 < j-i <= k.
/// The layout order is the id order 1..n.
Graph path_power(int k, int n);

struct JGraph {
    Graph graph;  // vertices z1..zm
    int m;        // (2k-1)(k+1)+1
    int g;        // k*k-1, the distinguished hole index
};
JGraph make_J(int k);  // k >= 2

Graph make_Z(int k);  // k >= 0; k-path power on k(k+1)+2 vertices named v1..vn

struct SCase {
    char value;  // 'a'..'d'
};

Graph make_S(int k);                  // k >= 2; core v1..vn plus w1..w4
Graph make_S_plus(int k, char variant);  // k >= 3; adds w^+ with the chosen neighbourhood

Graph make_F(int k);         // k >= 3; k-path power on k*k vertices named v1..vn
Graph make_M(int k, int l);  // k >= 3, l >= 0; F_k + F'_k joined by an induced path

Graph make_gem();           // path_power(2,5)
Graph make_M2(char sign);   // '-': two gems; '+': two gems joined by the edge x5 x'5

/// Family constructor driven by CLI-style parameters; throws graph_error on
/// unknown family or bad parameters.
struct FamilySpec {
    std::string family;  // path-power | J | Z | F | S | S+ | M | M2+ | M2- | gem
    int k = -1;
    int n = -1;
    int l = -1;
    char variant = 0;  // for S+
};
Graph make_family(const FamilySpec& spec);

}  // namespace cwkit

#endif
