#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace domcrit {

inline constexpr int kMaxVertices = 64;

/// Subset of {0, ..., universe-1} stored as a single 64-bit mask.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::uint64_t bits, int universe);

    static VertexSet empty(int universe) { return VertexSet(0, universe); }
    static VertexSet all(int universe);
    static VertexSet single(int v, int universe);

    std::uint64_t bits() const { return bits_; }
    int universe() const { return universe_; }

    bool contains(int v) const;
    bool is_empty() const { return bits_ == 0; }
    int size() const;
    int first() const;  // least element, -1 when empty
    std::vector<int> elements() const;

    VertexSet with(int v) const;
    VertexSet without(int v) const;
    VertexSet complement() const;
    bool is_subset_of(const VertexSet& other) const;

    friend VertexSet operator&(const VertexSet& a, const VertexSet& b);
    friend VertexSet operator|(const VertexSet& a, const VertexSet& b);
    bool operator==(const VertexSet&) const = default;

private:
    std::uint64_t bits_ = 0;
    int universe_ = 0;
};

/// Connected components of a (sub)graph. Parts are ordered by least member.
struct ComponentPartition {
    std::vector<VertexSet> parts;
    int odd_count = 0;

    int count() const { return static_cast<int>(parts.size()); }
};

/// Immutable simple undirected graph on at most 64 vertices, one adjacency
/// bitmask per vertex. All "mutations" copy.
class Graph {
public:
    static Graph build(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_rows(int n, std::span<const std::uint64_t> rows);

    int order() const { return n_; }
    int size() const;  // number of edges

    bool adjacent(int u, int v) const;
    std::uint64_t row(int v) const;
    VertexSet neighbors(int v) const;
    VertexSet closed_neighborhood(int v) const;
    int degree(int v) const;
    int min_degree() const;
    VertexSet vertices() const { return VertexSet::all(n_); }
    std::vector<std::pair<int, int>> edges() const;

    Graph delete_vertex(int v) const;
    Graph induced_subgraph(const VertexSet& s) const;
    Graph toggled_edge(int u, int v) const;
    Graph relabeled(std::span<const int> position) const;  // position[v] = new index

    ComponentPartition components(const VertexSet& removed) const;
    bool is_connected() const;
    bool is_biconnected() const;

    bool operator==(const Graph&) const = default;

private:
    Graph(int n, std::vector<std::uint64_t> rows) : n_(n), rows_(std::move(rows)) {}

    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

inline std::uint64_t full_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace domcrit
