#include "secluded/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace secluded {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> r;
    for (std::string t; in >> t;) r.push_back(t);
    return r;
}

template <class T>
T number(const std::string& s, int line, const char* what) {
    T v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
    return v;
}

Property parse_property(const std::string& s, int line, const FamilyLoader& load, std::string& ref) {
    auto colon = s.find(':');
    std::string head = s.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
    auto need_alpha = [&] {
        int a = number<int>(arg, line, "alpha");
        if (a < 1) throw ParseError(line, "alpha must be at least 1");
        return a;
    };
    if (head == "scc" && arg.empty()) return Property::strongly_connected();
    if (head == "clique" && arg.empty()) return Property::clique();
    if (head == "tournament" && arg.empty()) return Property::tournament();
    if (head == "dag" && arg.empty()) return Property::weakly_connected_acyclic();
    if (head == "alpha") return Property::alpha_bounded(need_alpha());
    if (head == "wcalpha") return Property::weakly_connected_alpha(need_alpha());
    if (head == "ffree" && !arg.empty()) {
        ref = arg;
        if (!load) throw ParseError(line, "no loader for family file '" + arg + "'");
        try {
            return Property::weakly_connected_ffree(load(arg));
        } catch (const std::exception& e) {
            throw ParseError(line, "family '" + arg + "': " + e.what());
        }
    }
    throw ParseError(line, "unknown property '" + s + "'");
}

std::string property_token(const Property& p, const std::string& ref) {
    if (p.kind == Property::Kind::WeaklyConnectedFFree) return "ffree:" + ref;
    return p.name();
}

} // namespace

Neighborhood parse_kind(const std::string& s) {
    if (s == "in") return Neighborhood::In;
    if (s == "out") return Neighborhood::Out;
    if (s == "total") return Neighborhood::Total;
    throw std::invalid_argument("unknown neighbourhood kind '" + s + "'");
}

std::string kind_name(Neighborhood k) {
    switch (k) {
    case Neighborhood::In: return "in";
    case Neighborhood::Out: return "out";
    case Neighborhood::Total: return "total";
    }
    return "?";
}

InstanceFile parse_instance(const std::string& text, const FamilyLoader& load_family) {
    InstanceFile f;
    std::istringstream in(text);
    std::string raw;
    int line = 0, n = -1;
    std::size_t m = 0;
    std::vector<Edge> edges;
    std::vector<Weight> weights;
    std::vector<char> weight_seen;
    bool empty_boundary = false;
    auto vertex = [&](const std::string& s) {
        int v = number<int>(s, line, "vertex id");
        if (v < 0 || v >= n) throw ParseError(line, "vertex " + s + " out of range");
        return v;
    };
    while (std::getline(in, raw)) {
        ++line;
        auto t = tokens(raw);
        if (t.empty() || t[0] == "c") continue;
        if (t[0] == "p") {
            if (n >= 0) throw ParseError(line, "duplicate header");
            if (t.size() != 8 || t[1] != "secluded") throw ParseError(line, "expected 'p secluded <n> <m> <kind> <property> <k> <w>'");
            n = number<int>(t[2], line, "vertex count");
            m = number<std::size_t>(t[3], line, "edge count");
            try {
                f.kind = parse_kind(t[4]);
            } catch (const std::invalid_argument& e) {
                throw ParseError(line, e.what());
            }
            f.property = parse_property(t[5], line, load_family, f.family_ref);
            f.k = number<int>(t[6], line, "budget");
            f.w = number<Weight>(t[7], line, "weight target");
            if (n < 0 || f.k < 0) throw ParseError(line, "negative size or budget");
            weights.assign(n, 1);
            weight_seen.assign(n, 0);
            continue;
        }
        if (n < 0) throw ParseError(line, "line before header");
        const std::string& tag = t[0];
        if (tag == "v") {
            if (t.size() != 3) throw ParseError(line, "expected 'v <id> <weight>'");
            int v = vertex(t[1]);
            if (weight_seen[v]) throw ParseError(line, "duplicate weight for vertex " + t[1]);
            weight_seen[v] = 1;
            weights[v] = number<Weight>(t[2], line, "weight");
        } else if (tag == "e") {
            if (t.size() != 3) throw ParseError(line, "expected 'e <u> <v>'");
            int a = vertex(t[1]), b = vertex(t[2]);
            if (a == b) throw ParseError(line, "self-loop");
            edges.emplace_back(a, b);
        } else if (tag == "b" && t.size() == 2 && t[1] == "-") {
            f.has_boundary = true;
            empty_boundary = true;
        } else if (tag == "i" || tag == "o" || tag == "b" || tag == "t") {
            if (t.size() != 2) throw ParseError(line, "expected '" + tag + " <id>'");
            int v = vertex(t[1]);
            VertexSet& dst = tag == "i" ? f.include : tag == "o" ? f.exclude : tag == "b" ? f.boundary : f.terminals;
            dst.push_back(v);
            if (tag == "b") f.has_boundary = true;
        } else {
            throw ParseError(line, "unknown line type '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError(line, "missing header");
    if (edges.size() != m)
        throw ParseError(line, "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    if (empty_boundary && !f.boundary.empty()) throw ParseError(line, "'b -' mixed with boundary vertices");
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ParseError(line, "duplicate edge");
    f.graph = Digraph(n, std::move(edges), std::move(weights));
    f.include = make_set(f.include);
    f.exclude = make_set(f.exclude);
    f.boundary = make_set(f.boundary);
    f.terminals = make_set(f.terminals);
    return f;
}

std::string serialize_instance(const InstanceFile& f) {
    std::ostringstream out;
    const Digraph& g = f.graph;
    out << "p secluded " << g.size() << ' ' << g.edge_count() << ' ' << kind_name(f.kind) << ' '
        << property_token(f.property, f.family_ref) << ' ' << f.k << ' ' << f.w << '\n';
    for (int v = 0; v < g.size(); ++v) out << "v " << v << ' ' << g.weight(v) << '\n';
    for (auto [a, b] : g.edges()) out << "e " << a << ' ' << b << '\n';
    for (Vertex v : f.include) out << "i " << v << '\n';
    for (Vertex v : f.exclude) out << "o " << v << '\n';
    if (f.has_boundary) {
        if (f.boundary.empty()) out << "b -\n";
        for (Vertex v : f.boundary) out << "b " << v << '\n';
    }
    for (Vertex v : f.terminals) out << "t " << v << '\n';
    return out.str();
}

SecludedInstance to_secluded(const InstanceFile& f) {
    if (f.boundaried()) throw std::invalid_argument("instance has boundary sets; expected a plain secluded instance");
    return {f.graph, f.kind, f.property, f.k, f.w};
}

BoundariedInstance to_boundaried(const InstanceFile& f) {
    if (f.kind != Neighborhood::Total || f.property.kind != Property::Kind::StronglyConnected)
        throw std::invalid_argument("boundaried instances need total neighbourhood and scc property");
    BoundariedInstance b;
    b.graph = f.graph;
    b.include = f.include;
    b.exclude = f.exclude;
    b.terminals = f.terminals;
    b.k = f.k;
    if (f.has_boundary) {
        b.boundary = f.boundary;
    } else {
        for (int v = 0; v < f.graph.size(); ++v) b.boundary.push_back(v);
    }
    return b;
}

InstanceFile from_secluded(const SecludedInstance& inst, const std::string& family_ref) {
    InstanceFile f;
    f.graph = inst.graph;
    f.kind = inst.kind;
    f.property = inst.property;
    f.family_ref = family_ref;
    f.k = inst.k;
    f.w = inst.w;
    return f;
}

InstanceFile from_boundaried(const BoundariedInstance& inst) {
    InstanceFile f;
    f.graph = inst.graph;
    f.k = inst.k;
    f.include = inst.include;
    f.exclude = inst.exclude;
    f.terminals = inst.terminals;
    f.boundary = inst.boundary;
    f.has_boundary = static_cast<int>(inst.boundary.size()) != inst.graph.size();
    return f;
}

std::vector<Digraph> parse_family(const std::string& text) {
    std::vector<std::pair<int, std::vector<Edge>>> members;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto t = tokens(raw);
        if (t.empty() || t[0] == "c") continue;
        if (t[0] == "g" && t.size() == 2) {
            int n = number<int>(t[1], line, "member size");
            if (n < 0) throw ParseError(line, "negative member size");
            members.emplace_back(n, std::vector<Edge>{});
        } else if (t[0] == "e" && t.size() == 3) {
            if (members.empty()) throw ParseError(line, "edge before the first 'g' line");
            int n = members.back().first;
            int a = number<int>(t[1], line, "vertex id"), b = number<int>(t[2], line, "vertex id");
            if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError(line, "edge endpoint out of range");
            if (a == b) throw ParseError(line, "self-loop");
            members.back().second.emplace_back(a, b);
        } else {
            throw ParseError(line, "expected 'g <n>' or 'e <u> <v>'");
        }
    }
    if (members.empty()) throw ParseError(line, "family has no members");
    std::vector<Digraph> fam;
    for (auto& [n, e] : members) fam.emplace_back(n, std::move(e));
    return fam;
}

std::string serialize_family(const std::vector<Digraph>& family) {
    std::ostringstream out;
    for (const auto& f : family) {
        out << "g " << f.size() << '\n';
        for (auto [a, b] : f.edges()) out << "e " << a << ' ' << b << '\n';
    }
    return out.str();
}

std::pair<int, std::vector<std::pair<int, int>>> parse_undirected(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line = 0, n = -1;
    std::size_t m = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, raw)) {
        ++line;
        auto t = tokens(raw);
        if (t.empty() || t[0] == "c") continue;
        if (t[0] == "p") {
            if (t.size() != 4 || t[1] != "edge") throw ParseError(line, "expected 'p edge <n> <m>'");
            n = number<int>(t[2], line, "vertex count");
            m = number<std::size_t>(t[3], line, "edge count");
        } else if (t[0] == "e" && t.size() == 3) {
            if (n < 0) throw ParseError(line, "edge before header");
            int a = number<int>(t[1], line, "vertex id"), b = number<int>(t[2], line, "vertex id");
            if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError(line, "edge endpoint out of range");
            edges.emplace_back(a, b);
        } else {
            throw ParseError(line, "unknown line");
        }
    }
    if (n < 0) throw ParseError(line, "missing header");
    if (edges.size() != m) throw ParseError(line, "edge count does not match header");
    return {n, edges};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

} // namespace secluded
