#pragma once

#include "perron/intmatrix.hpp"

#include <vector>

namespace perron {

/// Weighted oriented graph of a matrix: an edge i -> j of weight A_ij exists
/// exactly when A_ij != 0. Weights are >= 1 by construction.
class OrientedGraph {
  public:
    struct Edge {
        int from;
        int to;
        Int weight;
        bool operator==(const Edge &other) const = default;
    };

    explicit OrientedGraph(int n);

    int vertex_count() const { return n_; }
    void add_edge(int from, int to, Int weight);

    const std::vector<std::pair<int, Int>> &out_edges(int vertex) const;
    std::vector<Edge> edges() const;
    std::size_t edge_count() const;

  private:
    int n_;
    std::vector<std::vector<std::pair<int, Int>>> adjacency_;
};

OrientedGraph graph_of(const NonNegIntMatrix &matrix);

/// Partition into maximal strongly connected components plus a deterministic
/// topological order of the condensation.
///
/// `components` are listed by smallest contained vertex, each sorted.
/// `condensation_order` lists component indices so that every edge between
/// distinct components goes from an earlier component to a later one;
/// ties are broken by smallest contained vertex.
struct SccDecomposition {
    std::vector<std::vector<int>> components;
    std::vector<int> condensation_order;
    std::vector<int> component_of;

    int component_count() const { return static_cast<int>(components.size()); }
};

SccDecomposition scc_decompose(const OrientedGraph &graph);
SccDecomposition scc_decompose(const NonNegIntMatrix &matrix);

/// Principal submatrix on the given 0-based vertices, preserving their
/// relative order. Throws EmptySet / IndexOutOfRange.
NonNegIntMatrix restrict_to(const NonNegIntMatrix &matrix, const std::vector<int> &vertices);

/// Exact combinatorial classification of a strongly connected component:
///   trivial   - single vertex, no self-loop (spectral radius 0)
///   circle    - a single simple directed cycle, all weights 1 (radius 1)
///   expanding - anything else (radius > 1)
enum class SccClass { trivial, circle, expanding };

const char *scc_class_name(SccClass cls);

/// Classifies `component`, which must be an SCC of G(A); throws NotAComponent.
SccClass classify_component(const NonNegIntMatrix &matrix, const std::vector<int> &component);

/// Same classification for component `index` of an already-computed
/// decomposition of the same matrix; skips membership revalidation.
SccClass classify_component_of(const NonNegIntMatrix &matrix, const SccDecomposition &scc, int index);

/// True iff the component is a circle. Trivial components return false (their
/// distinguished status is visible through classify_component).
bool is_circle(const NonNegIntMatrix &matrix, const std::vector<int> &component);

/// Exact test for spectral radius > 1: true iff some SCC is expanding.
/// Decided combinatorially, no floating point anywhere.
bool exceeds_one(const NonNegIntMatrix &matrix);

/// gcd of cycle lengths inside a strongly connected component with at least
/// one edge. Throws NotAComponent (also for trivial components, which carry
/// no cycle).
int component_period(const NonNegIntMatrix &matrix, const std::vector<int> &component);

/// True iff the matrix is irreducible and aperiodic, i.e. some power is
/// strictly positive.
bool is_perron_frobenius(const NonNegIntMatrix &matrix);

} // namespace perron
