#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace flocknet {

// Which pairs count toward the complement set |E^c| = |V x V \ E|.
// with_diagonal keeps the (i,i) pairs (the set-theoretic reading, and the one
// that calibrates against the reference beta values); off_diagonal drops them.
enum class Complement { with_diagonal, off_diagonal };

const char* to_string(Complement c);
Complement complement_from_string(const std::string& s);

// Compressed adjacency, 0-based, neighbor lists sorted. This is the view the
// force kernels iterate.
struct Csr {
    std::vector<std::int32_t> offsets;    // size n+1
    std::vector<std::int32_t> neighbors;  // size |E| (ordered pairs)
    int degree(int i) const { return offsets[i + 1] - offsets[i]; }
};

struct ConnectivityConstant {
    // L = 1 / (1 + d(G) |E^c|); the numerator is always 1, so the exact
    // rational is carried by its integer denominator.
    std::uint64_t denominator = 1;
    double value() const { return 1.0 / static_cast<double>(denominator); }
};

struct GraphMetrics {
    int diameter = 0;
    std::uint64_t complement_size = 0;
    ConnectivityConstant connectivity;
    int max_degree = 0;
    bool is_connected = false;
    Complement convention = Complement::with_diagonal;
};

struct GraphValidation {
    bool symmetric = false;
    bool connected = false;
};

// Undirected graph stored as the full set of ordered vertex pairs, 1-based to
// match the edge-list text format. Immutable after construction; metrics are
// computed eagerly so shared concurrent reads need no synchronization.
class Graph {
public:
    Graph(int n_vertices, std::vector<std::pair<int, int>> edges);

    int n_vertices() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::uint64_t edge_count() const { return edges_.size(); }
    bool has_edge(int i, int j) const;

    bool is_symmetric() const { return symmetric_; }
    bool is_connected() const { return connected_; }
    GraphValidation validate() const { return {symmetric_, connected_}; }

    // Max BFS shortest-path length over all distinct vertex pairs.
    // Throws DisconnectedGraphError on a disconnected graph.
    int diameter() const;

    std::uint64_t complement_size(Complement c) const;
    ConnectivityConstant connectivity_constant(Complement c) const;  // needs connectivity
    int max_degree() const { return max_degree_; }
    GraphMetrics metrics(Complement c) const;

    const Csr& adjacency() const { return csr_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

    // Edge-list text: first line "N", then one "i j" line per ordered pair.
    static Graph read_edge_list(std::istream& in, const std::string& origin = "<stream>");
    void write_edge_list(std::ostream& out) const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;  // sorted, deduplicated, 1-based
    Csr csr_;
    bool symmetric_ = false;
    bool connected_ = false;
    int diameter_ = -1;
    int max_degree_ = 0;
};

enum class GraphFamily { g0, g1, g2, g3, g4 };

const char* to_string(GraphFamily f);
GraphFamily family_from_string(const std::string& s);

// The circulant offset used by family G3 for a given vertex count.
int circulant_offset(int n);

// Reference network families:
//   G0  complete
//   G1  path plus hubs {1, floor(N/2), N} joined to every vertex
//   G2  path |i-j| = 1
//   G3  circulant |i-j| = k or N-k with k = circulant_offset(N)
//   G4  ring plus hubs at i = 1 (mod 10) joined to every vertex
// Requires n >= 2 (G3: n >= 5).
Graph build_family(GraphFamily family, int n);

}  // namespace flocknet
