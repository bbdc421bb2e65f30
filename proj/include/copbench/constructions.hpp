#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "copbench/graph.hpp"
#include "copbench/plane.hpp"

namespace copbench {

// Point-line incidence graph of a projective plane: bipartite, with the
// points first (indices 0..N-1) and the lines after (N..2N-1).
// (q+1)-regular, girth 6.
Graph incidence_graph(const ProjectivePlane& plane);
std::vector<std::string> incidence_labels(const ProjectivePlane& plane);

// Orthogonal-polarity graph of PG(2,q): vertices are the points, x ~ y
// iff x.y = 0 over GF(q) and x != y. Degrees are q or q+1, C4-free,
// diameter 2.
Graph polarity_graph(int q);
std::vector<std::string> polarity_labels(int q);

// Edge-disjoint r-regular spanning subgraphs whose union is the host.
struct FactorDecomposition {
    int r = 0;
    std::vector<std::vector<std::pair<int, int>>> factors; // edges as u < v
};

// r = 1: repeated perfect-matching extraction; requires a regular
// bipartite host. r = 2: Euler-orientation splitting; requires a regular
// host of even degree. Anything else is NotFactorizable.
FactorDecomposition factorize(const Graph& g, int r);

// Removes the first i factors from a k-regular host; requires
// 1 <= i <= floor(eps*k/r) (IndexOutOfRange otherwise).
Graph strip_factors(const Graph& g, const FactorDecomposition& f, int i, double eps);

// Per-target deletion counts around a minimum-degree anchor.
struct DeletionVector {
    int anchor = -1;
    std::vector<int> targets; // the ceil(eps*delta) lowest-indexed neighbors of anchor
    std::vector<int> entries; // 0 <= x_i <= deg(target_i) - 3
};

// Selects the anchor (lowest-indexed minimum-degree vertex) and targets,
// validating the entry bounds (VectorOutOfRange, BadVectorLength).
DeletionVector make_deletion_vector(const Graph& g, double eps, std::vector<int> entries);

// Deletes entries[i] edges from target i into the anchor's second
// neighborhood, lowest-indexed endpoints first. Host must be C4-free.
Graph neighborhood_deletion(const Graph& g, const DeletionVector& dv);

enum class SpanMode { Girth5, C4Free };

// Spanning subgraphs distinguished by their degree profiles around a
// minimum-degree anchor: one per composition (g_0,...,g_{d-1}) of
// a = ceil(eps*delta), emitted in lexicographic profile order, at most
// max_count of them. Pairwise nonisomorphic (distinct degree multisets).
std::vector<Graph> spanning_profile_family(const Graph& g, double eps, SpanMode mode,
                                           int max_count);

// Triangles as sorted vertex triples in lexicographic order.
std::vector<std::array<int, 3>> triangle_list(const Graph& g);

// Deletes one edge from each of the first t - t_prime triangles of a
// C4-free host (whose triangles are pairwise edge-disjoint); choice[i]
// in {0,1,2} selects edge xy, yz or xz of the i-th triple x < y < z.
Graph triangle_trim(const Graph& g, int t_prime, const std::vector<int>& choice);

// Lexicographic product: (u,v) ~ (x,y) iff u~x, or u=x and v~y.
// Vertex (u,v) gets index u*|V(H)| + v.
Graph lex_product(const Graph& g, const Graph& h);
std::vector<std::string> lex_labels(const Graph& g, const Graph& h);

// Bipartite double cover: sheets a in {0,1}, vertex (v,a) = v + a*n,
// (v,a) ~ (w,1-a) iff v ~ w.
Graph double_cover(const Graph& g);
std::vector<std::string> double_cover_labels(const Graph& g);

// Blow-up of an oriented m-cycle by half-lines of PG(2,q), q odd.
// Cycle vertex u_j carries a vertex per line, cycle edge e_j = u_j->u_j+1
// carries a vertex per point; (u,B) ~ (e,x) iff e is the out-edge of u
// and x lands in B's first half, or e is the in-edge of u and x lands in
// the second half. Each line's halves come from a split_seed-keyed
// shuffle of its sorted points, assigned alternately.
//
// Postconditions are asserted on the built graph: order 2(q^2+q+1)m,
// (q^2+q+1)(q+1)m edges, (q+1)-regular, C4-free, connected, diameter 2m.
// A split that breaks connectivity raises DisconnectedSplit; one that
// breaks the diameter raises SplitPropertyViolated. Both mean: retry
// with another seed.
Graph bf_graph(int q, int m, std::uint64_t split_seed);
std::vector<std::string> bf_labels(int q, int m);

// Scans split_seed, split_seed+1, ... for a seed bf_graph accepts;
// at most attempts tries (SplitPropertyViolated if exhausted).
std::uint64_t bf_find_seed(int q, int m, std::uint64_t split_seed, int attempts);

} // namespace copbench
