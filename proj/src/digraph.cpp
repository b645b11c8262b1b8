#include "perron/digraph.hpp"

#include "perron/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace perron {

OrientedGraph::OrientedGraph(int n) : n_(n), adjacency_(static_cast<std::size_t>(n)) {
    if (n < 1)
        fail(error_kind::non_square, "graph needs at least one vertex");
}

void OrientedGraph::add_edge(int from, int to, Int weight) {
    if (from < 0 || from >= n_ || to < 0 || to >= n_)
        fail(error_kind::index_out_of_range, "edge endpoint outside 1.." + std::to_string(n_));
    if (sgn(weight) <= 0)
        fail(error_kind::internal_error, "edge weights must be >= 1");
    adjacency_[static_cast<std::size_t>(from)].emplace_back(to, std::move(weight));
}

const std::vector<std::pair<int, Int>> &OrientedGraph::out_edges(int vertex) const {
    if (vertex < 0 || vertex >= n_)
        fail(error_kind::index_out_of_range,
             "vertex " + std::to_string(vertex + 1) + " outside 1.." + std::to_string(n_));
    return adjacency_[static_cast<std::size_t>(vertex)];
}

std::vector<OrientedGraph::Edge> OrientedGraph::edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < n_; ++v)
        for (const auto &[to, weight] : adjacency_[static_cast<std::size_t>(v)])
            out.push_back(Edge{v, to, weight});
    return out;
}

std::size_t OrientedGraph::edge_count() const {
    std::size_t count = 0;
    for (const auto &adj : adjacency_)
        count += adj.size();
    return count;
}

OrientedGraph graph_of(const NonNegIntMatrix &matrix) {
    const int n = matrix.dim();
    OrientedGraph graph(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (sgn(matrix.at(i, j)) != 0)
                graph.add_edge(i, j, matrix.at(i, j));
    return graph;
}

namespace {

// Iterative Tarjan; the recursion is unrolled so deep condensation chains
// cannot exhaust the stack.
std::vector<std::vector<int>> tarjan_components(const OrientedGraph &graph, std::vector<int> &component_of) {
    const int n = graph.vertex_count();
    constexpr int unvisited = -1;
    std::vector<int> index(static_cast<std::size_t>(n), unvisited);
    std::vector<int> lowlink(static_cast<std::size_t>(n), 0);
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    std::vector<int> stack;
    std::vector<std::vector<int>> components;
    component_of.assign(static_cast<std::size_t>(n), -1);
    int next_index = 0;

    struct Frame {
        int vertex;
        std::size_t edge_pos;
    };
    std::vector<Frame> call_stack;

    for (int root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] != unvisited)
            continue;
        call_stack.push_back({root, 0});
        index[static_cast<std::size_t>(root)] = lowlink[static_cast<std::size_t>(root)] = next_index++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = true;

        while (!call_stack.empty()) {
            Frame &frame = call_stack.back();
            const int v = frame.vertex;
            const auto &adjacency = graph.out_edges(v);
            bool descended = false;
            while (frame.edge_pos < adjacency.size()) {
                const int w = adjacency[frame.edge_pos].first;
                ++frame.edge_pos;
                if (index[static_cast<std::size_t>(w)] == unvisited) {
                    index[static_cast<std::size_t>(w)] = lowlink[static_cast<std::size_t>(w)] = next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<std::size_t>(w)] = true;
                    call_stack.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[static_cast<std::size_t>(w)])
                    lowlink[static_cast<std::size_t>(v)] =
                        std::min(lowlink[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
            }
            if (descended)
                continue;

            if (lowlink[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                std::vector<int> component;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = false;
                    component_of[static_cast<std::size_t>(w)] = static_cast<int>(components.size());
                    component.push_back(w);
                } while (w != v);
                std::sort(component.begin(), component.end());
                components.push_back(std::move(component));
            }

            call_stack.pop_back();
            if (!call_stack.empty()) {
                const int parent = call_stack.back().vertex;
                lowlink[static_cast<std::size_t>(parent)] =
                    std::min(lowlink[static_cast<std::size_t>(parent)], lowlink[static_cast<std::size_t>(v)]);
            }
        }
    }
    return components;
}

} // namespace

SccDecomposition scc_decompose(const OrientedGraph &graph) {
    SccDecomposition result;
    std::vector<int> component_of;
    std::vector<std::vector<int>> components = tarjan_components(graph, component_of);
    const int k = static_cast<int>(components.size());

    // Canonical listing: components ordered by smallest contained vertex.
    std::vector<int> listing(static_cast<std::size_t>(k));
    std::iota(listing.begin(), listing.end(), 0);
    std::sort(listing.begin(), listing.end(),
              [&](int a, int b) { return components[static_cast<std::size_t>(a)].front() < components[static_cast<std::size_t>(b)].front(); });

    std::vector<int> renumber(static_cast<std::size_t>(k));
    for (int pos = 0; pos < k; ++pos)
        renumber[static_cast<std::size_t>(listing[static_cast<std::size_t>(pos)])] = pos;

    result.components.resize(static_cast<std::size_t>(k));
    for (int old = 0; old < k; ++old)
        result.components[static_cast<std::size_t>(renumber[static_cast<std::size_t>(old)])] =
            std::move(components[static_cast<std::size_t>(old)]);
    result.component_of.resize(component_of.size());
    for (std::size_t v = 0; v < component_of.size(); ++v)
        result.component_of[v] = renumber[static_cast<std::size_t>(component_of[v])];

    // Condensation edges, deduplicated.
    std::vector<std::vector<int>> cond_out(static_cast<std::size_t>(k));
    std::vector<int> in_degree(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < graph.vertex_count(); ++v) {
        const int cv = result.component_of[static_cast<std::size_t>(v)];
        for (const auto &[w, weight] : graph.out_edges(v)) {
            const int cw = result.component_of[static_cast<std::size_t>(w)];
            if (cv != cw)
                cond_out[static_cast<std::size_t>(cv)].push_back(cw);
        }
    }
    for (int c = 0; c < k; ++c) {
        auto &targets = cond_out[static_cast<std::size_t>(c)];
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (int t : targets)
            ++in_degree[static_cast<std::size_t>(t)];
    }

    // Kahn with a min-heap on the smallest contained vertex: sources first,
    // ties broken by smallest vertex index.
    auto min_vertex = [&](int c) { return result.components[static_cast<std::size_t>(c)].front(); };
    auto heap_less = [&](int a, int b) { return min_vertex(a) > min_vertex(b); };
    std::priority_queue<int, std::vector<int>, decltype(heap_less)> ready(heap_less);
    for (int c = 0; c < k; ++c)
        if (in_degree[static_cast<std::size_t>(c)] == 0)
            ready.push(c);
    while (!ready.empty()) {
        const int c = ready.top();
        ready.pop();
        result.condensation_order.push_back(c);
        for (int t : cond_out[static_cast<std::size_t>(c)])
            if (--in_degree[static_cast<std::size_t>(t)] == 0)
                ready.push(t);
    }
    if (static_cast<int>(result.condensation_order.size()) != k)
        fail(error_kind::internal_error, "condensation is not acyclic");
    return result;
}

SccDecomposition scc_decompose(const NonNegIntMatrix &matrix) { return scc_decompose(graph_of(matrix)); }

NonNegIntMatrix restrict_to(const NonNegIntMatrix &matrix, const std::vector<int> &vertices) {
    if (vertices.empty())
        fail(error_kind::empty_set, "restriction to the empty vertex set");
    std::vector<int> kept = vertices;
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    const int m = static_cast<int>(kept.size());
    for (int v : kept)
        if (v < 0 || v >= matrix.dim())
            fail(error_kind::index_out_of_range,
                 "vertex " + std::to_string(v + 1) + " outside 1.." + std::to_string(matrix.dim()));
    MatrixBuilder builder(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            builder.entry(i, j) = matrix.at(kept[static_cast<std::size_t>(i)], kept[static_cast<std::size_t>(j)]);
    return builder.build();
}

namespace {

bool sets_equal(const std::vector<int> &sorted_a, const std::vector<int> &sorted_b) {
    return sorted_a == sorted_b;
}

std::vector<int> normalized_component(const NonNegIntMatrix &matrix, const std::vector<int> &component) {
    if (component.empty())
        fail(error_kind::not_a_component, "empty vertex set is not a component");
    std::vector<int> sorted = component;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != component.size())
        fail(error_kind::not_a_component, "vertex set contains duplicates");
    for (int v : sorted)
        if (v < 0 || v >= matrix.dim())
            fail(error_kind::not_a_component,
                 "vertex " + std::to_string(v + 1) + " outside 1.." + std::to_string(matrix.dim()));
    return sorted;
}

// Throws unless `sorted` is exactly one of the SCCs of G(A).
void require_component(const NonNegIntMatrix &matrix, const std::vector<int> &sorted) {
    const SccDecomposition scc = scc_decompose(matrix);
    const int c = scc.component_of[static_cast<std::size_t>(sorted.front())];
    if (!sets_equal(scc.components[static_cast<std::size_t>(c)], sorted))
        fail(error_kind::not_a_component, "vertex set is not a strongly connected component");
}

SccClass classify_checked(const NonNegIntMatrix &matrix, const std::vector<int> &sorted) {
    if (sorted.size() == 1 && sgn(matrix.at(sorted.front(), sorted.front())) == 0)
        return SccClass::trivial;
    // Inside an SCC every edge lies on a cycle, so a weight >= 2 or a vertex
    // with two distinct in-component out-edges forces radius > 1.
    for (int v : sorted) {
        int out_in_component = 0;
        for (int w : sorted) {
            const Int &weight = matrix.at(v, w);
            if (sgn(weight) == 0)
                continue;
            if (weight > 1)
                return SccClass::expanding;
            ++out_in_component;
        }
        if (out_in_component != 1)
            return SccClass::expanding;
    }
    return SccClass::circle;
}

} // namespace

const char *scc_class_name(SccClass cls) {
    switch (cls) {
    case SccClass::trivial: return "trivial";
    case SccClass::circle: return "circle";
    case SccClass::expanding: return "expanding";
    }
    return "?";
}

SccClass classify_component(const NonNegIntMatrix &matrix, const std::vector<int> &component) {
    const std::vector<int> sorted = normalized_component(matrix, component);
    require_component(matrix, sorted);
    return classify_checked(matrix, sorted);
}

SccClass classify_component_of(const NonNegIntMatrix &matrix, const SccDecomposition &scc, int index) {
    if (index < 0 || index >= scc.component_count())
        fail(error_kind::index_out_of_range, "component index " + std::to_string(index + 1) +
                                                 " outside 1.." + std::to_string(scc.component_count()));
    return classify_checked(matrix, scc.components[static_cast<std::size_t>(index)]);
}

bool is_circle(const NonNegIntMatrix &matrix, const std::vector<int> &component) {
    return classify_component(matrix, component) == SccClass::circle;
}

bool exceeds_one(const NonNegIntMatrix &matrix) {
    const SccDecomposition scc = scc_decompose(matrix);
    for (const auto &component : scc.components)
        if (classify_checked(matrix, component) == SccClass::expanding)
            return true;
    return false;
}

int component_period(const NonNegIntMatrix &matrix, const std::vector<int> &component) {
    const std::vector<int> sorted = normalized_component(matrix, component);
    require_component(matrix, sorted);
    if (classify_checked(matrix, sorted) == SccClass::trivial)
        fail(error_kind::not_a_component, "trivial component carries no cycle");

    // BFS levels from any root; the period is the gcd of level(u)+1-level(v)
    // over in-component edges u -> v.
    std::vector<int> position(static_cast<std::size_t>(matrix.dim()), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i)
        position[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);

    std::vector<int> level(sorted.size(), -1);
    std::queue<int> frontier;
    level[0] = 0;
    frontier.push(sorted.front());
    long long period = 0;
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        const int lu = level[static_cast<std::size_t>(position[static_cast<std::size_t>(u)])];
        for (int w : sorted) {
            if (sgn(matrix.at(u, w)) == 0)
                continue;
            int &lw = level[static_cast<std::size_t>(position[static_cast<std::size_t>(w)])];
            if (lw == -1) {
                lw = lu + 1;
                frontier.push(w);
            } else {
                period = std::gcd(period, static_cast<long long>(lu) + 1 - lw);
            }
        }
    }
    if (period <= 0)
        fail(error_kind::internal_error, "period computation failed");
    return static_cast<int>(period);
}

bool is_perron_frobenius(const NonNegIntMatrix &matrix) {
    const SccDecomposition scc = scc_decompose(matrix);
    if (scc.component_count() != 1)
        return false;
    const std::vector<int> &whole = scc.components.front();
    if (classify_checked(matrix, whole) == SccClass::trivial)
        return false;
    return component_period(matrix, whole) == 1;
}

} // namespace perron
