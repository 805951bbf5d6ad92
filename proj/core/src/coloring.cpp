#include "qv/coloring.hpp"

#include <algorithm>
#include <numeric>

namespace qv {

std::vector<int> ColoringResult::sizes() const {
    std::vector<int> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(static_cast<int>(s.size()));
    return out;
}

std::vector<std::vector<bool>> adjacency(const GraphSpec& g) {
    std::vector<std::vector<bool>> adj(g.n, std::vector<bool>(g.n, false));
    for (const auto& e : g.edges)
        for (size_t a = 0; a < e.vertices.size(); ++a)
            for (size_t b = a + 1; b < e.vertices.size(); ++b) {
                adj[e.vertices[a]][e.vertices[b]] = true;
                adj[e.vertices[b]][e.vertices[a]] = true;
            }
    return adj;
}

namespace {

bool backtrack(const std::vector<std::vector<bool>>& adj, const std::vector<int>& order,
               std::vector<int>& color, size_t pos, int k) {
    if (pos == order.size()) return true;
    const int v = order[pos];
    int used = 0;
    for (size_t i = 0; i < pos; ++i) used = std::max(used, color[order[i]] + 1);
    const int limit = std::min(k, used + 1);  // new colors introduced in order
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int u = 0; u < static_cast<int>(adj.size()); ++u)
            if (adj[v][u] && color[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (backtrack(adj, order, color, pos + 1, k)) return true;
        color[v] = -1;
    }
    return false;
}

std::vector<int> dsatur(const std::vector<std::vector<bool>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> color(n, -1), degree(n, 0);
    for (int v = 0; v < n; ++v)
        degree[v] = static_cast<int>(std::count(adj[v].begin(), adj[v].end(), true));
    for (int step = 0; step < n; ++step) {
        int best = -1, best_sat = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            std::vector<bool> seen(n, false);
            int sat = 0;
            for (int u = 0; u < n; ++u)
                if (adj[v][u] && color[u] != -1 && !seen[color[u]]) {
                    seen[color[u]] = true;
                    ++sat;
                }
            if (sat > best_sat || (sat == best_sat && degree[v] > degree[best])) {
                best = v;
                best_sat = sat;
            }
        }
        std::vector<bool> taken(n, false);
        for (int u = 0; u < n; ++u)
            if (adj[best][u] && color[u] != -1) taken[color[u]] = true;
        int c = 0;
        while (taken[c]) ++c;
        color[best] = c;
    }
    return color;
}

}  // namespace

ColoringResult color_graph(const GraphSpec& g) {
    g.validate();
    const auto adj = adjacency(g);
    std::vector<int> color(g.n, -1);
    ColoringResult result;

    if (g.n <= 20) {
        std::vector<int> order(g.n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return std::count(adj[a].begin(), adj[a].end(), true) >
                   std::count(adj[b].begin(), adj[b].end(), true);
        });
        for (int k = 1; k <= g.n; ++k) {
            std::fill(color.begin(), color.end(), -1);
            if (backtrack(adj, order, color, 0, k)) break;
        }
        result.exact = true;
    } else {
        color = dsatur(adj);
        result.exact = false;
    }

    const int k = *std::max_element(color.begin(), color.end()) + 1;
    result.colors = k;
    result.sets.assign(k, {});
    for (int v = 0; v < g.n; ++v) result.sets[color[v]].push_back(v);
    // canonical labeling: classes ordered by their smallest vertex
    std::sort(result.sets.begin(), result.sets.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return result;
}

}  // namespace qv
