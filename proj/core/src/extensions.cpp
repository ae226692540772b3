#include "secluded/extensions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace secluded {

namespace {

template <class T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<VertexSet> reach_sets(const Digraph& d) {
    std::vector<VertexSet> reach(d.size());
    for (Vertex s = 0; s < d.size(); ++s) {
        std::vector<char> seen(d.size(), 0);
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            reach[s].push_back(x);
            for (Vertex y : d.out(x))
                if (!seen[y]) seen[y] = 1, stack.push_back(y);
        }
        reach[s] = make_set(std::move(reach[s]));
    }
    return reach;
}

struct Frame {
    Condensation cond;
    std::vector<VertexSet> in_of, out_of; // per component, base vertices
    std::vector<int> sources, sinks;      // component indices
    std::vector<VertexSet> reach;         // per attachment vertex
};

Frame analyse(const Extension& ext) {
    Frame f;
    f.cond = condensation(ext.attachment);
    const int c = static_cast<int>(f.cond.components.size());
    f.in_of.resize(c);
    f.out_of.resize(c);
    for (auto [b, d] : ext.to_attachment) f.in_of[f.cond.component_of[d]].push_back(b);
    for (auto [d, b] : ext.from_attachment) f.out_of[f.cond.component_of[d]].push_back(b);
    for (int i = 0; i < c; ++i) {
        f.in_of[i] = make_set(std::move(f.in_of[i]));
        f.out_of[i] = make_set(std::move(f.out_of[i]));
        if (f.cond.dag.in(i).empty()) f.sources.push_back(i);
        if (f.cond.dag.out(i).empty()) f.sinks.push_back(i);
    }
    f.reach = reach_sets(ext.attachment);
    return f;
}

std::vector<CrossEdge> connections(const Extension& ext, const Frame& f) {
    std::vector<VertexSet> out_at(ext.attachment.size());
    for (auto [d, b] : ext.from_attachment) out_at[d].push_back(b);
    std::vector<CrossEdge> conn;
    for (auto [a, d1] : ext.to_attachment)
        for (Vertex d2 : f.reach[d1])
            for (Vertex b : out_at[d2]) conn.emplace_back(a, b);
    sort_unique(conn);
    return conn;
}

} // namespace

void validate(const Extension& ext) {
    for (auto [b, d] : ext.to_attachment)
        if (!ext.base.has_vertex(b) || !ext.attachment.has_vertex(d))
            throw std::invalid_argument("cross edge (" + std::to_string(b) + "," + std::to_string(d) + ") out of range");
    for (auto [d, b] : ext.from_attachment)
        if (!ext.base.has_vertex(b) || !ext.attachment.has_vertex(d))
            throw std::invalid_argument("cross edge (" + std::to_string(d) + "," + std::to_string(b) + ") out of range");
}

Extension canonical(Extension ext) {
    validate(ext);
    sort_unique(ext.to_attachment);
    sort_unique(ext.from_attachment);
    return ext;
}

Digraph extended_graph(const Extension& ext) {
    validate(ext);
    const int nb = ext.base.size();
    std::vector<Edge> edges = ext.base.edges();
    for (auto [u, v] : ext.attachment.edges()) edges.emplace_back(nb + u, nb + v);
    for (auto [b, d] : ext.to_attachment) edges.emplace_back(b, nb + d);
    for (auto [d, b] : ext.from_attachment) edges.emplace_back(nb + d, b);
    std::vector<Weight> w = ext.base.weights();
    w.insert(w.end(), ext.attachment.weights().begin(), ext.attachment.weights().end());
    return Digraph(nb + ext.attachment.size(), std::move(edges), std::move(w));
}

ExtensionSignature signature(const Extension& ext) {
    validate(ext);
    Frame f = analyse(ext);
    ExtensionSignature sig;
    for (int c : f.sources) sig.source.push_back(f.in_of[c]);
    for (int c : f.sinks) sig.sink.push_back(f.out_of[c]);
    sort_unique(sig.source);
    sort_unique(sig.sink);
    sig.conn = connections(ext, f);
    return sig;
}

bool are_equivalent(const Extension& a, const Extension& b) {
    if (!(a.base == b.base)) throw std::invalid_argument("extensions over different base graphs");
    return signature(a) == signature(b);
}

Extension union_extensions(const Extension& a, const Extension& b) {
    if (!(a.base == b.base)) throw std::invalid_argument("extensions over different base graphs");
    const int na = a.attachment.size();
    std::vector<Edge> edges = a.attachment.edges();
    for (auto [u, v] : b.attachment.edges()) edges.emplace_back(na + u, na + v);
    std::vector<Weight> w = a.attachment.weights();
    w.insert(w.end(), b.attachment.weights().begin(), b.attachment.weights().end());
    Extension r{a.base, Digraph(na + b.attachment.size(), std::move(edges), std::move(w)), a.to_attachment,
                a.from_attachment};
    for (auto [x, d] : b.to_attachment) r.to_attachment.emplace_back(x, na + d);
    for (auto [d, x] : b.from_attachment) r.from_attachment.emplace_back(na + d, x);
    return canonical(std::move(r));
}

Extension compress(const Extension& ext) {
    validate(ext);
    Extension r{ext.base, Digraph(0), {}, {}};
    if (ext.attachment.size() == 0) return r;
    if (is_strongly_connected(ext.attachment)) {
        Weight total = 0;
        for (Weight x : ext.attachment.weights()) total = checked_add(total, x);
        r.attachment = Digraph(1, {}, {total});
        for (auto [b, d] : ext.to_attachment) r.to_attachment.emplace_back(b, 0);
        for (auto [d, b] : ext.from_attachment) r.from_attachment.emplace_back(0, b);
        return canonical(std::move(r));
    }
    const ExtensionSignature sig = signature(ext);

    // v_S first, then v_T, then v_c
    const int ns = static_cast<int>(sig.source.size()), nt = static_cast<int>(sig.sink.size());
    std::map<CrossEdge, int> conn_id;
    for (std::size_t i = 0; i < sig.conn.size(); ++i) conn_id[sig.conn[i]] = ns + nt + static_cast<int>(i);
    const int n = ns + nt + static_cast<int>(sig.conn.size());

    for (int i = 0; i < ns; ++i)
        for (Vertex s : sig.source[i]) r.to_attachment.emplace_back(s, i);
    for (int i = 0; i < nt; ++i)
        for (Vertex t : sig.sink[i]) r.from_attachment.emplace_back(ns + i, t);
    for (auto [c, id] : conn_id) {
        r.to_attachment.emplace_back(c.first, id);
        r.from_attachment.emplace_back(id, c.second);
    }

    auto has_conn = [&](Vertex a, Vertex b) { return std::binary_search(sig.conn.begin(), sig.conn.end(), CrossEdge{a, b}); };
    auto all_conn = [&](const VertexSet& xs, const VertexSet& ys) {
        for (Vertex x : xs)
            for (Vertex y : ys)
                if (!has_conn(x, y)) return false;
        return true;
    };
    // v_S -> v_T whenever S x T is realised
    std::vector<Edge> edges;
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nt; ++j)
            if (all_conn(sig.source[i], sig.sink[j])) edges.emplace_back(i, ns + j);
    // each v_c hangs off the first (v_S, v_T) pair that admits it
    for (auto [c, id] : conn_id) {
        bool placed = false;
        for (int i = 0; i < ns && !placed; ++i) {
            if (!all_conn(sig.source[i], {c.second})) continue;
            for (int j = 0; j < nt && !placed; ++j) {
                if (!all_conn(sig.source[i], sig.sink[j]) || !all_conn({c.first}, sig.sink[j])) continue;
                edges.emplace_back(i, id);
                edges.emplace_back(id, ns + j);
                placed = true;
            }
        }
        if (!placed) throw std::logic_error("compress: connection without a source/sink witness");
    }
    r.attachment = Digraph(n, std::move(edges), std::vector<Weight>(n, 0));
    return canonical(std::move(r));
}

bool extended_strongly_connected(const Extension& ext, const VertexSet& u) {
    validate(ext);
    require_vertices(ext.base, u);
    const int nu = static_cast<int>(u.size());
    auto local = [&](Vertex b) {
        auto it = std::lower_bound(u.begin(), u.end(), b);
        return it != u.end() && *it == b ? static_cast<int>(it - u.begin()) : -1;
    };
    Digraph gu = induced(ext.base, u);
    std::vector<Edge> edges = gu.edges();
    for (auto [x, y] : ext.attachment.edges()) edges.emplace_back(nu + x, nu + y);
    for (auto [b, d] : ext.to_attachment)
        if (int l = local(b); l >= 0) edges.emplace_back(l, nu + d);
    for (auto [d, b] : ext.from_attachment)
        if (int l = local(b); l >= 0) edges.emplace_back(nu + d, l);
    return is_strongly_connected(Digraph(nu + ext.attachment.size(), std::move(edges)));
}

bool interchange_check(const Extension& a, const Extension& b, const VertexSet& u) {
    if (u.empty()) throw std::invalid_argument("interchange check needs a nonempty set");
    return extended_strongly_connected(a, u) == extended_strongly_connected(b, u);
}

} // namespace secluded
