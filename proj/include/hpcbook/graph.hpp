#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "hpcbook/errors.hpp"

namespace hpcbook {

using VertexId = int;
using EdgeId = int;
using FaceId = int;

struct Edge {
    VertexId tail = -1;
    VertexId head = -1;

    bool operator==(const Edge&) const = default;
};

// An upward planar embedding given as a rotation system: at every vertex the
// outgoing edges form the upper arc and the incoming edges the lower arc,
// each listed left-to-right.  The clockwise circular order of darts leaving v
// is out_rot[v] followed by in_rot[v] reversed.
struct EmbeddedDigraph {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<EdgeId>> out_rot;
    std::vector<std::vector<EdgeId>> in_rot;

    int edge_count() const { return static_cast<int>(edges.size()); }

    bool has_edge(VertexId u, VertexId v) const {
        for (EdgeId e : out_rot[u])
            if (edges[e].head == v) return true;
        return false;
    }

    EdgeId find_edge(VertexId u, VertexId v) const {
        for (EdgeId e : out_rot[u])
            if (edges[e].head == v) return e;
        return -1;
    }
};

// Darts: 2e = forward (tail->head), 2e+1 = backward.
namespace dart {
inline int fwd(EdgeId e) { return 2 * e; }
inline int bwd(EdgeId e) { return 2 * e + 1; }
inline int rev(int d) { return d ^ 1; }
inline EdgeId edge(int d) { return d >> 1; }
inline bool is_fwd(int d) { return (d & 1) == 0; }
} // namespace dart

namespace detail {

// Clockwise list of darts leaving v.
inline std::vector<int> cw_darts(const EmbeddedDigraph& g, VertexId v) {
    std::vector<int> out;
    out.reserve(g.out_rot[v].size() + g.in_rot[v].size());
    for (EdgeId e : g.out_rot[v]) out.push_back(dart::fwd(e));
    for (auto it = g.in_rot[v].rbegin(); it != g.in_rot[v].rend(); ++it)
        out.push_back(dart::bwd(*it));
    return out;
}

// face_next[d] = dart following d in its face orbit (face kept on the right
// of each walked dart).  The successor of d is the clockwise predecessor of
// rev(d) in the rotation at d's target vertex.
inline std::vector<int> face_next_table(const EmbeddedDigraph& g) {
    const int m = g.edge_count();
    std::vector<int> next(2 * m, -1);
    for (VertexId v = 0; v < g.n; ++v) {
        const std::vector<int> cw = cw_darts(g, v);
        const int k = static_cast<int>(cw.size());
        for (int i = 0; i < k; ++i) {
            // cw[i] leaves v, so rev(cw[i]) arrives at v.
            next[dart::rev(cw[i])] = cw[(i - 1 + k) % k];
        }
    }
    return next;
}

inline int count_face_orbits(const EmbeddedDigraph& g) {
    const int m = g.edge_count();
    const std::vector<int> next = face_next_table(g);
    std::vector<char> seen(2 * m, 0);
    int orbits = 0;
    for (int d = 0; d < 2 * m; ++d) {
        if (seen[d]) continue;
        ++orbits;
        for (int x = d; !seen[x]; x = next[x]) seen[x] = 1;
    }
    return orbits;
}

inline std::vector<VertexId> topological_order(const EmbeddedDigraph& g) {
    std::vector<int> indeg(g.n, 0);
    for (const Edge& e : g.edges) ++indeg[e.head];
    std::vector<VertexId> stack, order;
    order.reserve(g.n);
    for (VertexId v = g.n - 1; v >= 0; --v)
        if (indeg[v] == 0) stack.push_back(v);
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (EdgeId e : g.out_rot[v])
            if (--indeg[g.edges[e].head] == 0) stack.push_back(g.edges[e].head);
    }
    return order;
}

} // namespace detail

// Validates and assembles an embedded digraph.  Checks index ranges, simple-
// ness, rotation coverage, acyclicity and the Euler face count (traced faces
// must equal m - n + 2, which also forces connectivity).
inline EmbeddedDigraph build_graph(int vertex_count,
                                   std::vector<Edge> edges,
                                   std::vector<std::vector<EdgeId>> out_rot,
                                   std::vector<std::vector<EdgeId>> in_rot) {
    if (vertex_count <= 0)
        throw error(errc::invalid_input, "vertex count must be positive");

    EmbeddedDigraph g;
    g.n = vertex_count;
    g.edges = std::move(edges);
    g.out_rot = std::move(out_rot);
    g.in_rot = std::move(in_rot);
    const int m = g.edge_count();

    if (static_cast<int>(g.out_rot.size()) != g.n || static_cast<int>(g.in_rot.size()) != g.n)
        throw error(errc::rotation_mismatch, "rotation tables must have one entry per vertex");

    std::unordered_set<std::int64_t> seen_pairs;
    seen_pairs.reserve(m * 2);
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = g.edges[e];
        if (ed.tail < 0 || ed.tail >= g.n || ed.head < 0 || ed.head >= g.n)
            throw error(errc::invalid_input, "edge " + std::to_string(e) + " endpoint out of range");
        if (ed.tail == ed.head)
            throw error(errc::invalid_input, "edge " + std::to_string(e) + " is a self-loop");
        std::int64_t key = static_cast<std::int64_t>(ed.tail) * g.n + ed.head;
        std::int64_t rkey = static_cast<std::int64_t>(ed.head) * g.n + ed.tail;
        if (!seen_pairs.insert(key).second || seen_pairs.count(rkey))
            throw error(errc::duplicate_edge,
                        "parallel or antiparallel edge (" + std::to_string(ed.tail) + "," +
                            std::to_string(ed.head) + ")");
    }

    // Rotation coverage: out_rot[v] is a permutation of edges with tail v,
    // in_rot[v] of edges with head v.
    std::vector<char> mark(m, 0);
    for (VertexId v = 0; v < g.n; ++v) {
        for (EdgeId e : g.out_rot[v]) {
            if (e < 0 || e >= m || g.edges[e].tail != v || mark[e])
                throw error(errc::rotation_mismatch,
                            "out rotation of vertex " + std::to_string(v) + " invalid");
            mark[e] = 1;
        }
    }
    for (EdgeId e = 0; e < m; ++e)
        if (!mark[e])
            throw error(errc::rotation_mismatch,
                        "edge " + std::to_string(e) + " missing from out rotations");
    std::fill(mark.begin(), mark.end(), 0);
    for (VertexId v = 0; v < g.n; ++v) {
        for (EdgeId e : g.in_rot[v]) {
            if (e < 0 || e >= m || g.edges[e].head != v || mark[e])
                throw error(errc::rotation_mismatch,
                            "in rotation of vertex " + std::to_string(v) + " invalid");
            mark[e] = 1;
        }
    }
    for (EdgeId e = 0; e < m; ++e)
        if (!mark[e])
            throw error(errc::rotation_mismatch,
                        "edge " + std::to_string(e) + " missing from in rotations");

    if (static_cast<int>(detail::topological_order(g).size()) != g.n)
        throw error(errc::cyclic_graph, "graph contains a directed cycle");

    if (g.n == 1) return g; // a single vertex bounds the one unbounded face

    const int orbits = detail::count_face_orbits(g);
    if (orbits != m - g.n + 2)
        throw error(errc::not_planar_embedding,
                    "face trace found " + std::to_string(orbits) + " faces, expected " +
                        std::to_string(m - g.n + 2));
    return g;
}

// Left-right reflection: reverses every rotation list.  An involution.
inline EmbeddedDigraph mirror(const EmbeddedDigraph& g) {
    EmbeddedDigraph out = g;
    for (auto& r : out.out_rot) std::reverse(r.begin(), r.end());
    for (auto& r : out.in_rot) std::reverse(r.begin(), r.end());
    return out;
}

// Upside-down rotation of the plane: edge directions flip and left-to-right
// order inverts.  Preserves embedded-N occurrences (the pattern is symmetric
// under a half-turn).
inline EmbeddedDigraph reverse(const EmbeddedDigraph& g) {
    EmbeddedDigraph out;
    out.n = g.n;
    out.edges.reserve(g.edges.size());
    for (const Edge& e : g.edges) out.edges.push_back({e.head, e.tail});
    out.out_rot.resize(g.n);
    out.in_rot.resize(g.n);
    for (VertexId v = 0; v < g.n; ++v) {
        out.out_rot[v].assign(g.in_rot[v].rbegin(), g.in_rot[v].rend());
        out.in_rot[v].assign(g.out_rot[v].rbegin(), g.out_rot[v].rend());
    }
    return out;
}

struct EmbeddedStDigraph {
    EmbeddedDigraph base;
    VertexId s = -1;
    VertexId t = -1;
};

// Identifies the unique source and sink and verifies both lie on the outer
// face (the orbit left of the left border, traced from the reversed leftmost
// outgoing dart of s).
inline EmbeddedStDigraph check_st(const EmbeddedDigraph& g) {
    std::vector<VertexId> sources, sinks;
    for (VertexId v = 0; v < g.n; ++v) {
        if (g.in_rot[v].empty()) sources.push_back(v);
        if (g.out_rot[v].empty()) sinks.push_back(v);
    }
    if (sources.size() != 1) {
        std::string who;
        for (VertexId v : sources) who += " " + std::to_string(v);
        throw error(errc::multiple_sources, "sources:" + who);
    }
    if (sinks.size() != 1) {
        std::string who;
        for (VertexId v : sinks) who += " " + std::to_string(v);
        throw error(errc::multiple_sinks, "sinks:" + who);
    }

    EmbeddedStDigraph st;
    st.base = g;
    st.s = sources[0];
    st.t = sinks[0];
    if (g.n == 1) return st;

    const std::vector<int> next = detail::face_next_table(g);
    bool saw_t = false;
    const int start = dart::bwd(g.out_rot[st.s][0]);
    int d = start;
    do {
        if (g.edges[dart::edge(d)].tail == st.t || g.edges[dart::edge(d)].head == st.t)
            saw_t = true;
        d = next[d];
    } while (d != start);
    if (!saw_t)
        throw error(errc::not_planar_embedding, "sink is not on the outer face");
    return st;
}

} // namespace hpcbook
