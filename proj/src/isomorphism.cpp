#include "usp/isomorphism.hpp"

#include <algorithm>

#include "usp/error.hpp"

namespace usp {

namespace {

struct CanonSearch {
    const Graph& g;
    std::vector<int> perm;  // position -> original vertex
    std::vector<bool> used;
    std::vector<bool> best;  // complete code, row-by-row upper triangle
    std::vector<bool> current;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph), used(graph.n, false) {}

    // Exchanging twins (equal neighborhoods apart from each other) is an
    // automorphism, so one representative per twin class suffices.
    bool twin(int u, int v) const {
        if (g.degree(u) != g.degree(v)) return false;
        std::vector<int> nu = g.adj[u], nv = g.adj[v];
        std::erase(nu, v);
        std::erase(nv, u);
        return nu == nv;
    }

    // Compared against the incumbent afresh at every node; a prefix already
    // smaller than the incumbent cannot lead to a greater complete code.
    void rec(int pos, int bits_done) {
        if (have_best) {
            for (int i = 0; i < bits_done; ++i) {
                if (current[i] == best[i]) continue;
                if (current[i] < best[i]) return;
                break;  // strictly greater prefix
            }
        }
        if (pos == g.n) {
            if (!have_best || std::lexicographical_compare(best.begin(), best.end(),
                                                           current.begin(), current.end())) {
                best = current;
                have_best = true;
            }
            return;
        }
        std::vector<int> candidates;
        for (int v = 0; v < g.n; ++v) {
            if (used[v]) continue;
            bool dup = false;
            for (int c : candidates)
                if (twin(c, v)) {
                    dup = true;
                    break;
                }
            if (!dup) candidates.push_back(v);
        }
        for (int v : candidates) {
            for (int i = 0; i < pos; ++i) current[bits_done + i] = g.has_edge(perm[i], v);
            used[v] = true;
            perm.push_back(v);
            rec(pos + 1, bits_done + pos);
            perm.pop_back();
            used[v] = false;
        }
    }
};

} // namespace

std::vector<bool> canonical_form(const Graph& g, int max_vertices) {
    if (g.n > max_vertices)
        fail(ErrorKind::BudgetExceeded,
             "canonical form capped at " + std::to_string(max_vertices) + " vertices");
    CanonSearch search(g);
    search.current.assign(static_cast<size_t>(g.n) * (g.n - 1) / 2, false);
    search.rec(0, 0);
    return search.best;
}

bool are_isomorphic(const Graph& a, const Graph& b, int max_vertices) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a, max_vertices) == canonical_form(b, max_vertices);
}

} // namespace usp
