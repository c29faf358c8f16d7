#include "latpath/edge_graph.hpp"

#include <algorithm>
#include <queue>

namespace latpath {

int EdgeGraph::num_edges() const {
    int twice = 0;
    for (const auto& nb : adj) twice += static_cast<int>(nb.size());
    return twice / 2;
}

bool EdgeGraph::has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

EdgeGraph build_edge_graph(const Polytope& p) {
    const int nv = p.num_vertices();
    EdgeGraph g;
    g.n_vertices = nv;
    g.adj.assign(nv, {});

    for (int u = 0; u < nv; ++u) {
        for (int v = u + 1; v < nv; ++v) {
            boost::dynamic_bitset<> common = p.tight_rows(u) & p.tight_rows(v);
            int on_face = 0;
            for (int w = 0; w < nv && on_face <= 2; ++w)
                if ((p.tight_rows(w) & common) == common) ++on_face;
            if (on_face == 2) {
                g.adj[u].push_back(v);
                g.adj[v].push_back(u);
            }
        }
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());

    // Polytope graphs are connected; a disconnect here is a construction bug.
    std::vector<char> seen(nv, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
    }
    if (reached != nv) throw InternalError("edge graph is disconnected");
    return g;
}

}  // namespace latpath
