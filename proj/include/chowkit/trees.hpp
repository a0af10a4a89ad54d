#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chowkit/errors.hpp"
#include "chowkit/hypersimplex.hpp"

namespace chowkit::trees {

// Trees bounding n labeled endpoints. Vertex ids: leaves are 1..n, internal
// vertices are n+1..n+m. Every internal vertex has valence >= 3, so the
// tree is the combinatorial type of a stable n-pointed genus-0 curve.
struct LabeledTree {
    int n = 0;
    int internals = 0;
    std::vector<std::pair<int, int>> edges; // unordered pairs of vertex ids

    int vertex_count() const { return n + internals; }
    bool is_leaf(int v) const { return v >= 1 && v <= n; }
    bool is_internal(int v) const { return v > n && v <= n + internals; }
};

inline std::vector<std::vector<int>> adjacency(const LabeledTree& t) {
    std::vector<std::vector<int>> adj(t.vertex_count() + 1);
    for (auto [a, b] : t.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

inline bool is_valid_tree(const LabeledTree& t) {
    if (t.n < 3 || t.internals < 1) return false;
    const int v = t.vertex_count();
    if (static_cast<int>(t.edges.size()) != v - 1) return false;
    auto adj = adjacency(t);
    // connectivity
    std::vector<bool> seen(v + 1, false);
    std::vector<int> stack{1};
    seen[1] = true;
    int visited = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++visited;
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
    }
    if (visited != v) return false;
    for (int x = 1; x <= t.n; ++x)
        if (adj[x].size() != 1) return false;
    for (int x = t.n + 1; x <= v; ++x)
        if (adj[x].size() < 3) return false;
    return true;
}

// Stability is exactly validity for this encoding.
inline bool is_stable_tree(const LabeledTree& t) { return is_valid_tree(t); }

inline int stratum_dimension(const LabeledTree& t) {
    auto adj = adjacency(t);
    int dim = 0;
    for (int v = t.n + 1; v <= t.vertex_count(); ++v)
        dim += static_cast<int>(adj[v].size()) - 3;
    return dim;
}

// Blocks of the equivalence i ~ j iff the path [A_i, A_j] avoids v, i.e.
// leaves grouped by connected component of t - v.
inline std::vector<std::vector<int>> vertex_relation(const LabeledTree& t, int v) {
    if (!t.is_internal(v)) throw NotInternal("vertex is not internal");
    auto adj = adjacency(t);
    std::vector<std::vector<int>> blocks;
    std::vector<bool> seen(t.vertex_count() + 1, false);
    seen[v] = true;
    for (int start : adj[v]) {
        if (seen[start]) continue;
        std::vector<int> block;
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (t.is_leaf(x)) block.push_back(x);
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

// Canonical signature: root at the internal vertex adjacent to leaf 1,
// sort child signatures recursively. Equal signatures == isomorphic trees
// fixing the labels.
inline std::string canonical_signature(const LabeledTree& t) {
    auto adj = adjacency(t);
    const int root = adj[1][0];
    auto rec = [&](auto&& self, int v, int parent) -> std::string {
        if (t.is_leaf(v)) return "L" + std::to_string(v);
        std::vector<std::string> kids;
        for (int w : adj[v])
            if (w != parent) kids.push_back(self(self, w, v));
        std::sort(kids.begin(), kids.end());
        std::string out = "(";
        for (std::size_t i = 0; i < kids.size(); ++i) {
            if (i) out += ' ';
            out += kids[i];
        }
        return out + ")";
    };
    return "L1" + rec(rec, root, 1);
}

inline bool isomorphic(const LabeledTree& a, const LabeledTree& b) {
    return a.n == b.n && canonical_signature(a) == canonical_signature(b);
}

inline LabeledTree star_tree(int n) {
    if (n < 3) throw BadParams("need n >= 3");
    LabeledTree t;
    t.n = n;
    t.internals = 1;
    for (int i = 1; i <= n; ++i) t.edges.push_back({i, n + 1});
    return t;
}

// Renumber internal ids to n+1..n+m in a deterministic traversal order.
inline LabeledTree normalize_ids(const LabeledTree& t) {
    auto adj = adjacency(t);
    std::map<int, int> remap;
    int next = t.n + 1;
    std::vector<int> stack{adj[1][0]};
    std::set<int> seen{adj[1][0]};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (t.is_internal(v) && !remap.count(v)) remap[v] = next++;
        for (int w : adj[v])
            if (t.is_internal(w) && !seen.count(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    LabeledTree out;
    out.n = t.n;
    out.internals = t.internals;
    for (auto [a, b] : t.edges) {
        int x = t.is_internal(a) ? remap.at(a) : a;
        int y = t.is_internal(b) ? remap.at(b) : b;
        if (x > y) std::swap(x, y);
        out.edges.push_back({x, y});
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

// All trees bounding n labeled endpoints, up to isomorphism fixing labels.
// Grown by attaching leaf m either to an internal vertex or to a new
// trivalent vertex subdividing an edge; output sorted by canonical form.
inline std::vector<LabeledTree> enumerate_trees(int n) {
    if (n < 3) throw BadParams("need n >= 3");
    std::vector<LabeledTree> cur{star_tree(3)};
    for (int m = 4; m <= n; ++m) {
        std::vector<LabeledTree> next;
        std::set<std::string> seen;
        auto push = [&](LabeledTree t) {
            t = normalize_ids(t);
            if (seen.insert(canonical_signature(t)).second) next.push_back(std::move(t));
        };
        for (const auto& t : cur) {
            // shift internal ids to make room for leaf m
            LabeledTree s;
            s.n = m;
            s.internals = t.internals;
            for (auto [a, b] : t.edges)
                s.edges.push_back({t.is_internal(a) ? a + 1 : a, t.is_internal(b) ? b + 1 : b});
            for (int v = m + 1; v <= m + s.internals; ++v) {
                LabeledTree grown = s;
                grown.edges.push_back({m, v});
                push(std::move(grown));
            }
            for (std::size_t e = 0; e < s.edges.size(); ++e) {
                LabeledTree grown = s;
                const auto [a, b] = grown.edges[e];
                const int w = m + grown.internals + 1;
                grown.internals += 1;
                grown.edges.erase(grown.edges.begin() + e);
                grown.edges.push_back({a, w});
                grown.edges.push_back({w, b});
                grown.edges.push_back({m, w});
                push(std::move(grown));
            }
        }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end(), [](const LabeledTree& a, const LabeledTree& b) {
        return canonical_signature(a) < canonical_signature(b);
    });
    return cur;
}

// The matroid decomposition of Delta(2,n) encoded by a tree: one piece per
// internal vertex v, with vertices e_ij for the leaf pairs whose joining
// path passes through v.
inline hypersimplex::MatroidDecomposition tree_to_decomposition(const LabeledTree& t) {
    if (!is_valid_tree(t)) throw BadParams("not a valid labeled tree");
    hypersimplex::MatroidDecomposition d;
    d.k = 2;
    d.n = t.n;
    for (int v = t.n + 1; v <= t.vertex_count(); ++v) {
        auto blocks = vertex_relation(t, v);
        hypersimplex::MatroidPolytope piece;
        piece.k = 2;
        piece.n = t.n;
        for (std::size_t a = 0; a < blocks.size(); ++a)
            for (std::size_t b = a + 1; b < blocks.size(); ++b)
                for (int i : blocks[a])
                    for (int j : blocks[b])
                        piece.vertices.insert(i < j ? Subset{i, j} : Subset{j, i});
        d.pieces.push_back(std::move(piece));
    }
    std::sort(d.pieces.begin(), d.pieces.end());
    return d;
}

inline std::vector<std::set<Subset>> decomposition_key(const hypersimplex::MatroidDecomposition& d) {
    std::vector<std::set<Subset>> key;
    for (const auto& p : d.pieces) key.push_back(p.vertices);
    std::sort(key.begin(), key.end());
    return key;
}

namespace detail {

// Equivalence classes on {1..n} whose cross pairs are exactly the piece
// vertices; empty result if no such relation exists.
inline std::vector<std::vector<int>> piece_relation(const hypersimplex::MatroidPolytope& p) {
    const int n = p.n;
    std::vector<int> parent(n + 1);
    for (int i = 1; i <= n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!p.vertices.count(Subset{i, j})) parent[find(i)] = find(j);
    std::map<int, std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i) blocks[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, b] : blocks) out.push_back(std::move(b));
    // transitivity check: pairs inside one block must be non-vertices
    for (const auto& b : out)
        for (std::size_t a = 0; a < b.size(); ++a)
            for (std::size_t c = a + 1; c < b.size(); ++c)
                if (p.vertices.count(Subset{b[a], b[c]})) return {};
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

// Inverse of tree_to_decomposition, via the facet combinatorics: pieces are
// vertices, two pieces are joined when one's class is the complement of the
// other's, leaf i hangs off the unique piece having {i} as a class.
inline LabeledTree decomposition_to_tree(const hypersimplex::MatroidDecomposition& d) {
    if (d.k != 2) throw NotADecomposition("only k = 2 decompositions encode trees");
    if (d.pieces.empty()) throw NotADecomposition("empty decomposition");
    const int n = d.n;
    std::vector<std::vector<std::vector<int>>> relations;
    for (const auto& p : d.pieces) {
        auto blocks = detail::piece_relation(p);
        if (blocks.size() < 3) throw NotADecomposition("piece is not a full-dimensional matroid polytope");
        relations.push_back(std::move(blocks));
    }

    LabeledTree t;
    t.n = n;
    t.internals = static_cast<int>(d.pieces.size());

    auto block_set = [](const std::vector<int>& b) { return std::set<int>(b.begin(), b.end()); };

    for (std::size_t a = 0; a < relations.size(); ++a) {
        for (std::size_t b = a + 1; b < relations.size(); ++b) {
            bool adjacent = false;
            for (const auto& ka : relations[a]) {
                std::set<int> comp;
                for (int i = 1; i <= n; ++i) comp.insert(i);
                for (int x : ka) comp.erase(x);
                for (const auto& kb : relations[b])
                    if (block_set(kb) == comp) adjacent = true;
            }
            if (adjacent)
                t.edges.push_back({n + static_cast<int>(a) + 1, n + static_cast<int>(b) + 1});
        }
    }
    for (int leaf = 1; leaf <= n; ++leaf) {
        int owner = -1;
        for (std::size_t a = 0; a < relations.size(); ++a)
            for (const auto& k : relations[a])
                if (k.size() == 1 && k[0] == leaf) {
                    if (owner != -1) throw NotADecomposition("leaf facet contained in two pieces");
                    owner = static_cast<int>(a);
                }
        if (owner == -1) throw NotADecomposition("leaf facet not covered");
        t.edges.push_back({leaf, n + owner + 1});
    }
    if (!is_valid_tree(t)) throw NotADecomposition("pieces do not assemble into a tree");
    t = normalize_ids(t);
    if (decomposition_key(tree_to_decomposition(t)) != decomposition_key(d))
        throw NotADecomposition("decomposition is not generated by any tree");
    return t;
}

// Forget marked point i: delete the leaf, suppress the resulting valence-2
// vertex if any, relabel remaining leaves by closing the gap.
inline LabeledTree forget_point(const LabeledTree& t, int i) {
    if (t.n < 4) throw TooFewLeaves("need n >= 4 to forget a point");
    if (i < 1 || i > t.n) throw BadIndices("leaf label out of range");
    auto adj = adjacency(t);
    const int hub = adj[i][0];

    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : t.edges)
        if (a != i && b != i) edges.push_back({a, b});

    if (adj[hub].size() == 3) {
        // suppression: splice the two surviving edges at hub
        std::vector<int> ends;
        std::vector<std::pair<int, int>> kept;
        for (auto [a, b] : edges) {
            if (a == hub) ends.push_back(b);
            else if (b == hub) ends.push_back(a);
            else kept.push_back({a, b});
        }
        kept.push_back({ends[0], ends[1]});
        edges = std::move(kept);
    }

    auto relabel_leaf = [&](int v) { return v < i ? v : v - 1; };
    LabeledTree out;
    out.n = t.n - 1;
    out.internals = t.internals - (adj[hub].size() == 3 ? 1 : 0);
    // removed internal vertex leaves a gap; compress internal ids afterwards
    std::map<int, int> internal_ids;
    for (auto [a, b] : edges) {
        for (int v : {a, b})
            if (t.is_internal(v) && !internal_ids.count(v)) internal_ids[v] = 0;
    }
    int next = out.n + 1;
    for (auto& [old_id, fresh] : internal_ids) fresh = next++;
    for (auto [a, b] : edges) {
        int x = t.is_internal(a) ? internal_ids.at(a) : relabel_leaf(a);
        int y = t.is_internal(b) ? internal_ids.at(b) : relabel_leaf(b);
        if (x > y) std::swap(x, y);
        out.edges.push_back({x, y});
    }
    std::sort(out.edges.begin(), out.edges.end());
    if (!is_valid_tree(out)) throw BadParams("forgetting produced an invalid tree");
    return normalize_ids(out);
}

} // namespace chowkit::trees
