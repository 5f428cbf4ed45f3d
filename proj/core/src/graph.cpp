#include "ac/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "ac/rng.hpp"

namespace ac {
namespace {

std::int64_t edge_key(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::int64_t>(u) * n + v;
}

// Tracks edges under construction inside the generators.
struct EdgeBuilder {
    explicit EdgeBuilder(int n) : n(n), degree(n, 0) {}

    bool has(int u, int v) const { return present.count(edge_key(n, u, v)) > 0; }

    bool add(int u, int v) {
        if (u == v || !present.insert(edge_key(n, u, v)).second) return false;
        edges.push_back({std::min(u, v), std::max(u, v)});
        ++degree[u];
        ++degree[v];
        return true;
    }

    int n;
    std::vector<Edge> edges;
    std::vector<int> degree;
    std::unordered_set<std::int64_t> present;
};

}  // namespace

Graph::Graph(int node_count, std::vector<Edge> edges, std::vector<double> edge_costs)
    : node_count_(node_count) {
    if (node_count < 1) throw std::invalid_argument("Graph: node_count must be positive");
    if (!edge_costs.empty() && edge_costs.size() != edges.size())
        throw std::invalid_argument("Graph: edge_costs length must match edges");
    if (edge_costs.empty()) edge_costs.assign(edges.size(), 1.0);

    // canonicalize endpoints and sort edges together with their costs
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Edge& e = edges[i];
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= node_count) throw std::invalid_argument("Graph: node index out of range");
        if (e.u == e.v) throw std::invalid_argument("Graph: self-loops are not allowed");
        if (edge_costs[i] < 0.0) throw std::invalid_argument("Graph: edge costs must be nonnegative");
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::pair(edges[a].u, edges[a].v) < std::pair(edges[b].u, edges[b].v);
    });
    edges_.reserve(edges.size());
    edge_costs_.reserve(edges.size());
    for (std::size_t i : order) {
        if (!edges_.empty() && edges_.back() == edges[i])
            throw std::invalid_argument("Graph: duplicate edge");
        edges_.push_back(edges[i]);
        edge_costs_.push_back(edge_costs[i]);
    }

    adjacency_.assign(node_count_, {});
    incident_.assign(node_count_, {});
    for (int e = 0; e < edge_count(); ++e) {
        adjacency_[edges_[e].u].push_back(edges_[e].v);
        adjacency_[edges_[e].v].push_back(edges_[e].u);
        incident_[edges_[e].u].push_back(e);
        incident_[edges_[e].v].push_back(e);
    }
    for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

double Graph::total_cost() const {
    return std::accumulate(edge_costs_.begin(), edge_costs_.end(), 0.0);
}

void Graph::check_node(int v) const {
    if (v < 0 || v >= node_count_) throw std::out_of_range("Graph: unknown node id");
}

int Graph::degree(int v) const {
    check_node(v);
    return static_cast<int>(adjacency_[v].size());
}

std::span<const int> Graph::neighbors(int v) const {
    check_node(v);
    return adjacency_[v];
}

std::span<const int> Graph::incident_edges(int v) const {
    check_node(v);
    return incident_[v];
}

bool is_connected(const Graph& g) {
    const int n = g.node_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

Matrix build_laplacian(const Graph& g) {
    Matrix l(g.node_count(), g.node_count());
    for (const Edge& e : g.edges()) {
        l(e.u, e.u) += 1.0;
        l(e.v, e.v) += 1.0;
        l(e.u, e.v) -= 1.0;
        l(e.v, e.u) -= 1.0;
    }
    return l;
}

Graph gen_star(int n) {
    if (n < 2) throw std::invalid_argument("gen_star: need at least 2 nodes");
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int v = 1; v < n; ++v) edges.push_back({0, v});
    return Graph(n, std::move(edges));
}

Graph gen_chain(int n) {
    if (n < 2) throw std::invalid_argument("gen_chain: need at least 2 nodes");
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, std::move(edges));
}

Graph gen_uniform(int n, double target_degree, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_uniform: need at least 2 nodes");
    if (target_degree < 1.0 || target_degree >= n)
        throw std::invalid_argument("gen_uniform: target degree must satisfy 1 <= d < n");

    constexpr int kMaxAttempts = 100;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));

        std::int64_t total_stubs = std::llround(static_cast<double>(n) * target_degree);
        if (total_stubs % 2 != 0) --total_stubs;
        const int base = static_cast<int>(total_stubs / n);
        const int extra = static_cast<int>(total_stubs % n);

        std::vector<int> stubs;
        stubs.reserve(total_stubs);
        for (int v = 0; v < n; ++v) {
            const int k = base + (v < extra ? 1 : 0);
            for (int i = 0; i < k; ++i) stubs.push_back(v);
        }

        EdgeBuilder builder(n);
        // pair stubs; colliding pairs go back into the pool for another pass
        for (int pass = 0; pass < 20 && stubs.size() >= 2; ++pass) {
            for (std::size_t i = stubs.size() - 1; i > 0; --i)
                std::swap(stubs[i], stubs[rng.below(i + 1)]);
            std::vector<int> leftover;
            if (stubs.size() % 2 != 0) {
                leftover.push_back(stubs.back());
                stubs.pop_back();
            }
            const std::size_t before = builder.edges.size();
            for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
                if (!builder.add(stubs[i], stubs[i + 1])) {
                    leftover.push_back(stubs[i]);
                    leftover.push_back(stubs[i + 1]);
                }
            }
            if (builder.edges.size() == before) break;
            stubs = std::move(leftover);
        }

        const double mean_degree = 2.0 * static_cast<double>(builder.edges.size()) / n;
        if (std::fabs(mean_degree - target_degree) > 0.1 * target_degree) continue;
        Graph g(n, std::move(builder.edges));
        if (is_connected(g)) return g;
    }
    throw GenerationError("gen_uniform: no connected graph with the requested degree after retries");
}

Graph gen_clustered(std::uint64_t seed) {
    constexpr int kNodes = 100;
    constexpr int kClusters = 4;
    constexpr int kClusterSize = 25;
    constexpr int kHubsPerCluster = 2;
    constexpr int kInterLinks = 26;
    constexpr double kTargetNonHubDegree = 5.0;

    constexpr int kMaxAttempts = 100;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        EdgeBuilder builder(kNodes);

        auto cluster_of = [](int v) { return v / kClusterSize; };
        auto is_hub = [&](int v) { return v % kClusterSize < kHubsPerCluster; };

        // hubs cover every peer inside their own cluster
        for (int c = 0; c < kClusters; ++c) {
            for (int h = 0; h < kHubsPerCluster; ++h) {
                const int hub = c * kClusterSize + h;
                for (int v = c * kClusterSize; v < (c + 1) * kClusterSize; ++v)
                    if (v != hub) builder.add(hub, v);
            }
        }

        // 26 inter-cluster links per hub, endpoints uniform over other clusters
        bool ok = true;
        for (int c = 0; c < kClusters && ok; ++c) {
            for (int h = 0; h < kHubsPerCluster && ok; ++h) {
                const int hub = c * kClusterSize + h;
                int added = 0;
                for (int tries = 0; added < kInterLinks && tries < 20000; ++tries) {
                    int t = static_cast<int>(rng.below(kNodes - kClusterSize));
                    if (t >= c * kClusterSize) t += kClusterSize;
                    if (builder.add(hub, t)) ++added;
                }
                ok = added == kInterLinks;
            }
        }
        if (!ok) continue;

        // pad non-hub nodes with intra-cluster links up to the target mean degree
        auto non_hub_degree_sum = [&]() {
            long sum = 0;
            for (int v = 0; v < kNodes; ++v)
                if (!is_hub(v)) sum += builder.degree[v];
            return sum;
        };
        const int non_hub_count = kNodes - kClusters * kHubsPerCluster;
        long deg_sum = non_hub_degree_sum();
        for (int tries = 0; deg_sum < kTargetNonHubDegree * non_hub_count && tries < 20000; ++tries) {
            const int c = static_cast<int>(rng.below(kClusters));
            const int a = c * kClusterSize + kHubsPerCluster +
                          static_cast<int>(rng.below(kClusterSize - kHubsPerCluster));
            const int b = c * kClusterSize + kHubsPerCluster +
                          static_cast<int>(rng.below(kClusterSize - kHubsPerCluster));
            if (builder.add(a, b)) deg_sum += 2;
        }
        if (deg_sum < kTargetNonHubDegree * non_hub_count) continue;

        int high_degree = 0;
        for (int v = 0; v < kNodes; ++v)
            if (builder.degree[v] >= 50) ++high_degree;
        if (high_degree != kClusters * kHubsPerCluster) continue;
        const double non_hub_mean = static_cast<double>(deg_sum) / non_hub_count;
        if (non_hub_mean < 4.0 || non_hub_mean > 8.0) continue;

        Graph g(kNodes, std::move(builder.edges));
        if (is_connected(g)) return g;
    }
    throw GenerationError("gen_clustered: no valid clustered graph after retries");
}

void write_graph(const Graph& g, std::ostream& out) {
    out << g.node_count() << ' ' << g.edge_count() << '\n';
    char buf[64];
    for (int e = 0; e < g.edge_count(); ++e) {
        std::snprintf(buf, sizeof(buf), "%.9g", g.edge_costs()[e]);
        out << g.edges()[e].u << ' ' << g.edges()[e].v << ' ' << buf << '\n';
    }
}

Graph read_graph(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("graph file: missing 'n m' header");
    if (m < 0) throw std::invalid_argument("graph file: negative edge count");
    std::vector<Edge> edges(m);
    std::vector<double> costs(m);
    for (int e = 0; e < m; ++e) {
        if (!(in >> edges[e].u >> edges[e].v >> costs[e]))
            throw std::invalid_argument("graph file: truncated edge list");
    }
    return Graph(n, std::move(edges), std::move(costs));
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_graph: cannot open " + path);
    write_graph(g, out);
    if (!out) throw std::runtime_error("save_graph: write failed for " + path);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_graph: cannot open " + path);
    return read_graph(in);
}

}  // namespace ac
