#include "flocknet/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "flocknet/errors.hpp"

namespace flocknet {

const char* to_string(Complement c) {
    return c == Complement::with_diagonal ? "with_diagonal" : "off_diagonal";
}

Complement complement_from_string(const std::string& s) {
    if (s == "with_diagonal") return Complement::with_diagonal;
    if (s == "off_diagonal") return Complement::off_diagonal;
    throw ConfigError("unknown complement convention '" + s + "' (expected with_diagonal or off_diagonal)");
}

Graph::Graph(int n_vertices, std::vector<std::pair<int, int>> edges) : n_(n_vertices) {
    if (n_ < 1) throw Error("graph: n_vertices must be positive");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& [i, j] : edges) {
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw Error("graph: edge (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range 1.." +
                        std::to_string(n_));
        if (i == j)
            throw Error("graph: self-loop (" + std::to_string(i) + ", " + std::to_string(i) + ") not allowed");
    }
    edges_ = std::move(edges);

    csr_.offsets.assign(n_ + 1, 0);
    for (const auto& [i, j] : edges_) ++csr_.offsets[i];  // i is 1-based: counts land in row i-1's slot+1
    for (int v = 0; v < n_; ++v) csr_.offsets[v + 1] += csr_.offsets[v];
    csr_.neighbors.resize(edges_.size());
    {
        // edges_ is sorted by (i, j), so neighbor lists come out sorted.
        std::vector<std::int32_t> fill(n_, 0);
        std::size_t e = 0;
        for (int v = 0; v < n_; ++v) {
            const std::int32_t begin = csr_.offsets[v];
            while (e < edges_.size() && edges_[e].first - 1 == v) {
                csr_.neighbors[begin + fill[v]++] = static_cast<std::int32_t>(edges_[e].second - 1);
                ++e;
            }
        }
    }

    symmetric_ = true;
    for (const auto& [i, j] : edges_) {
        if (!std::binary_search(edges_.begin(), edges_.end(), std::make_pair(j, i))) {
            symmetric_ = false;
            break;
        }
    }

    for (int v = 0; v < n_; ++v) max_degree_ = std::max(max_degree_, csr_.degree(v));

    // All-pairs BFS; also settles connectivity. Single-vertex graphs are
    // connected with diameter 0.
    connected_ = true;
    diameter_ = 0;
    std::vector<int> dist(n_);
    std::deque<int> queue;
    for (int s = 0; s < n_ && connected_; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        queue.assign(1, s);
        int reached = 1;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (std::int32_t k = csr_.offsets[u]; k < csr_.offsets[u + 1]; ++k) {
                const int w = csr_.neighbors[k];
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    diameter_ = std::max(diameter_, dist[w]);
                    queue.push_back(w);
                    ++reached;
                }
            }
        }
        if (reached != n_) {
            connected_ = false;
            diameter_ = -1;
        }
    }
}

bool Graph::has_edge(int i, int j) const {
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

int Graph::diameter() const {
    if (!connected_)
        throw DisconnectedGraphError("graph diameter undefined: graph is disconnected");
    return diameter_;
}

std::uint64_t Graph::complement_size(Complement c) const {
    const std::uint64_t n = static_cast<std::uint64_t>(n_);
    const std::uint64_t all = c == Complement::with_diagonal ? n * n : n * n - n;
    return all - edge_count();
}

ConnectivityConstant Graph::connectivity_constant(Complement c) const {
    return {1 + static_cast<std::uint64_t>(diameter()) * complement_size(c)};
}

GraphMetrics Graph::metrics(Complement c) const {
    GraphMetrics m;
    m.convention = c;
    m.is_connected = connected_;
    m.max_degree = max_degree_;
    m.complement_size = complement_size(c);
    if (connected_) {
        m.diameter = diameter_;
        m.connectivity = connectivity_constant(c);
    }
    return m;
}

Graph Graph::read_edge_list(std::istream& in, const std::string& origin) {
    std::string line;
    int lineno = 0;
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    bool have_n = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!have_n) {
            if (!(ls >> n)) {
                if (ls.eof()) continue;  // blank / comment-only line
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected vertex count");
            }
            have_n = true;
            continue;
        }
        int i, j;
        if (!(ls >> i)) continue;
        if (!(ls >> j))
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'i j' pair");
        edges.emplace_back(i, j);
    }
    if (!have_n) throw ConfigError(origin + ": empty edge-list file");
    try {
        return Graph(n, std::move(edges));
    } catch (const Error& e) {
        throw ConfigError(origin + ": " + e.what());
    }
}

void Graph::write_edge_list(std::ostream& out) const {
    out << n_ << "\n";
    for (const auto& [i, j] : edges_) out << i << " " << j << "\n";
}

const char* to_string(GraphFamily f) {
    switch (f) {
        case GraphFamily::g0: return "G0";
        case GraphFamily::g1: return "G1";
        case GraphFamily::g2: return "G2";
        case GraphFamily::g3: return "G3";
        case GraphFamily::g4: return "G4";
    }
    return "?";
}

GraphFamily family_from_string(const std::string& s) {
    if (s == "G0" || s == "g0") return GraphFamily::g0;
    if (s == "G1" || s == "g1") return GraphFamily::g1;
    if (s == "G2" || s == "g2") return GraphFamily::g2;
    if (s == "G3" || s == "g3") return GraphFamily::g3;
    if (s == "G4" || s == "g4") return GraphFamily::g4;
    throw ConfigError("unknown graph family '" + s + "' (expected G0..G4)");
}

int circulant_offset(int n) {
    if (n % 2 == 1) return 2;
    if (n % 4 == 0) return n / 2 - 1;
    return n / 2 - 2;  // n = 2 (mod 4)
}

namespace {

void add_undirected(std::set<std::pair<int, int>>& e, int i, int j) {
    e.emplace(i, j);
    e.emplace(j, i);
}

}  // namespace

Graph build_family(GraphFamily family, int n) {
    if (n < 2) throw Error("build_family: n must be at least 2");
    if (family == GraphFamily::g3 && n < 5)
        throw Error("build_family: G3 requires n >= 5");

    std::set<std::pair<int, int>> e;
    switch (family) {
        case GraphFamily::g0:
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) add_undirected(e, i, j);
            break;
        case GraphFamily::g1: {
            // Path plus three hubs; for n <= 5 this union is already the
            // complete graph.
            const std::set<int> hubs = {1, n / 2, n};
            for (int i = 1; i < n; ++i) add_undirected(e, i, i + 1);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (hubs.count(i) || hubs.count(j)) add_undirected(e, i, j);
            break;
        }
        case GraphFamily::g2:
            for (int i = 1; i < n; ++i) add_undirected(e, i, i + 1);
            break;
        case GraphFamily::g3: {
            const int k = circulant_offset(n);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    const int diff = j - i;
                    if (diff == k || diff == n - k) add_undirected(e, i, j);
                }
            break;
        }
        case GraphFamily::g4: {
            for (int i = 1; i <= n; ++i) {
                const int j = i % n + 1;  // ring successor
                if (j != i) add_undirected(e, i, j);
            }
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (i % 10 == 1 || j % 10 == 1) add_undirected(e, i, j);
            break;
        }
    }
    return Graph(n, std::vector<std::pair<int, int>>(e.begin(), e.end()));
}

}  // namespace flocknet
