#include <atomic>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "secluded/branching.hpp"
#include "secluded/gadgets.hpp"
#include "secluded/generate.hpp"
#include "secluded/io.hpp"
#include "secluded/oracle.hpp"
#include "secluded/recursive.hpp"
#include "secluded/reductions.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace secluded;

namespace {

constexpr int kOk = 0, kError = 1, kInfeasible = 2;

struct SolveOptions {
    std::string solver = "auto";
    int q = 3;
    std::string set_family = "exhaustive";
    bool json = false;
    bool timing = false;
    bool complementations = false;
};

struct Outcome {
    std::string solver;
    std::optional<Solution> solution;
    std::uint64_t nodes = 0;
    std::int64_t micros = 0;
};

InstanceFile load_instance(const std::string& path) {
    fs::path dir = fs::path(path).parent_path();
    FamilyLoader loader = [dir](const std::string& ref) {
        fs::path p(ref);
        if (p.is_relative()) p = dir / p;
        return parse_family(read_file(p.string()));
    };
    return parse_instance(read_file(path), loader);
}

SetFamilyMode family_mode(const std::string& spec) {
    if (spec == "exhaustive") return SetFamilyMode::exhaustive();
    const std::string prefix = "randomized:";
    if (spec.rfind(prefix, 0) == 0) {
        std::string rest = spec.substr(prefix.size());
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("expected randomized:<seed>:<eps>");
        return SetFamilyMode::randomized(std::stoull(rest.substr(0, colon)), std::stod(rest.substr(colon + 1)));
    }
    throw std::invalid_argument("unknown set family mode '" + spec + "'");
}

RecursiveConfig recursive_config(const SolveOptions& o) {
    RecursiveConfig c;
    c.q = o.q;
    c.family = family_mode(o.set_family);
    return c;
}

bool has_branching(const SecludedInstance& inst) {
    switch (inst.property.kind) {
    case Property::Kind::AlphaBounded: return true;
    case Property::Kind::Tournament: return inst.kind != Neighborhood::Total;
    case Property::Kind::Clique: return inst.kind == Neighborhood::Total && is_symmetric(inst.graph);
    default: return false;
    }
}

Outcome run_branching(const SecludedInstance& inst) {
    const Property& p = inst.property;
    // in-neighbourhoods are out-neighbourhoods of the reversed graph
    const bool flip = inst.kind == Neighborhood::In;
    Digraph g = flip ? reverse(inst.graph) : inst.graph;
    BranchResult r;
    std::string name;
    switch (p.kind) {
    case Property::Kind::AlphaBounded:
        if (inst.kind == Neighborhood::Total) {
            r = solve_total_alpha_bounded(g, inst.w, inst.k, p.alpha);
            name = "branching:total-alpha";
        } else {
            r = solve_out_alpha_bounded(g, inst.w, inst.k, p.alpha);
            name = "branching:out-alpha";
        }
        break;
    case Property::Kind::Tournament:
        if (inst.kind == Neighborhood::Total) throw std::invalid_argument("no branching solver for total tournaments");
        r = solve_out_tournament(g, inst.w, inst.k);
        name = "branching:tournament";
        break;
    case Property::Kind::Clique:
        if (inst.kind != Neighborhood::Total) throw std::invalid_argument("the clique solver needs total neighbourhoods");
        r = solve_secluded_clique(g, inst.w, inst.k);
        name = "branching:clique";
        break;
    default: throw std::invalid_argument("no branching solver for property " + p.name());
    }
    Outcome o{name, std::nullopt, r.stats.nodes_expanded, 0};
    if (r.solution) o.solution = make_solution(inst.graph, inst.kind, r.solution->set);
    return o;
}

Outcome run_oracle(const SecludedInstance& inst) {
    if (inst.property.needs_nonempty() && inst.graph.size() <= kMaskLimit) {
        try {
            return {"oracle", brute_force_secluded(inst), 0, 0};
        } catch (const OracleSizeError&) {
            SearchStats st;
            auto s = search_connected_secluded(inst, &st);
            return {"search", s, st.nodes, 0};
        }
    }
    return {"oracle", brute_force_secluded(inst), 0, 0};
}

Outcome run_recursive(const SecludedInstance& inst, const SolveOptions& o) {
    if (inst.kind != Neighborhood::Total || inst.property.kind != Property::Kind::StronglyConnected)
        throw std::invalid_argument("the recursive solver handles total neighbourhood with property scc");
    RecursiveStats st;
    auto s = solve_tsscs(inst.graph, inst.w, inst.k, recursive_config(o), &st);
    return {"recursive", s, st.unbreakable_solves + st.recursion_edges, 0};
}

Outcome run_plain(const SecludedInstance& inst, const SolveOptions& o, const std::string& solver) {
    if (solver == "oracle") return run_oracle(inst);
    if (solver == "branching") return run_branching(inst);
    if (solver == "recursive") return run_recursive(inst, o);
    if (solver == "auto") {
        if (has_branching(inst)) return run_branching(inst);
        if (inst.kind == Neighborhood::Total && inst.property.kind == Property::Kind::StronglyConnected)
            return run_recursive(inst, o);
        return run_oracle(inst);
    }
    throw std::invalid_argument("unknown solver '" + solver + "'");
}

// Boundaried instances: one entry per complementation.
std::pair<std::string, ComplementationSolutions> run_boundaried(const BoundariedInstance& inst, const SolveOptions& o,
                                                                const std::string& solver, std::uint64_t& nodes) {
    if (solver == "oracle") return {"oracle", brute_force_complementations(inst)};
    if (solver == "auto" || solver == "recursive") {
        auto r = solve_boundaried(inst, recursive_config(o));
        nodes = r.stats.unbreakable_solves + r.stats.recursion_edges;
        return {"recursive", r.solutions};
    }
    throw std::invalid_argument("solver '" + solver + "' does not handle boundaried instances");
}

template <class F>
Outcome timed(bool timing, F&& f) {
    auto start = std::chrono::steady_clock::now();
    Outcome o = f();
    if (timing)
        o.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    return o;
}

Outcome solve_file(const InstanceFile& f, const SolveOptions& o, const std::string& solver) {
    return timed(o.timing, [&]() -> Outcome {
        if (!f.boundaried()) return run_plain(to_secluded(f), o, solver);
        BoundariedInstance b = to_boundaried(f);
        if (!b.terminals.empty()) throw std::invalid_argument("instance has terminals; use --complementations");
        std::uint64_t nodes = 0;
        auto [name, sols] = run_boundaried(b, o, solver, nodes);
        // without terminals the last complementation is the instance itself (k' = k)
        return {name, sols.back(), nodes, 0};
    });
}

std::string join(const VertexSet& s) {
    std::string r;
    for (Vertex v : s) r += (r.empty() ? "" : " ") + std::to_string(v);
    return r;
}

json record(const std::string& id, const Outcome& o) {
    json j;
    j["instance"] = id;
    j["solver"] = o.solver;
    j["status"] = o.solution ? "feasible" : "infeasible";
    if (o.solution) {
        j["weight"] = o.solution->weight;
        j["set"] = o.solution->set;
        j["neighborhood"] = o.solution->neighborhood;
    } else {
        j["weight"] = "infeasible";
        j["set"] = json::array();
        j["neighborhood"] = json::array();
    }
    j["nodes"] = o.nodes;
    j["micros"] = o.micros;
    return j;
}

std::string text_record(const Outcome& o) {
    std::ostringstream out;
    out << "solver " << o.solver << '\n';
    out << "status " << (o.solution ? "feasible" : "infeasible") << '\n';
    if (o.solution) {
        out << "weight " << o.solution->weight << '\n';
        out << "set " << join(o.solution->set) << '\n';
        out << "neighborhood " << join(o.solution->neighborhood) << '\n';
    }
    out << "nodes " << o.nodes << '\n';
    out << "micros " << o.micros << '\n';
    return out.str();
}

std::string instance_id(const std::string& path) { return fs::path(path).stem().string(); }

int cmd_solve(const std::string& path, const SolveOptions& o) {
    InstanceFile f = load_instance(path);
    if (o.complementations) {
        BoundariedInstance b = to_boundaried(f);
        std::uint64_t nodes = 0;
        auto [name, sols] = run_boundaried(b, o, o.solver, nodes);
        std::size_t i = 0;
        bool any = false;
        for_each_complementation(b, [&](const Complementation& c) {
            const auto& s = sols[i];
            any = any || s.has_value();
            json j = record(instance_id(path), Outcome{name, s, nodes, 0});
            j["complementation"] = i++;
            j["x"] = c.x;
            j["y"] = c.y;
            j["z"] = c.z;
            j["r"] = c.r;
            j["k_prime"] = c.k_prime;
            std::cout << j.dump() << '\n';
        });
        return any ? kOk : kInfeasible;
    }
    Outcome out = solve_file(f, o, o.solver);
    if (o.json)
        std::cout << record(instance_id(path), out).dump() << '\n';
    else
        std::cout << text_record(out);
    return out.solution ? kOk : kInfeasible;
}

struct ClaimedSolution {
    bool feasible = false;
    Weight weight = 0;
    VertexSet set, neighborhood;
};

ClaimedSolution parse_solution(const std::string& text) {
    ClaimedSolution c;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j = json::parse(text.substr(first, text.find('\n', first) - first));
        c.feasible = j.at("status") == "feasible";
        if (c.feasible) {
            c.weight = j.at("weight").get<Weight>();
            c.set = j.at("set").get<VertexSet>();
            c.neighborhood = j.at("neighborhood").get<VertexSet>();
        }
        return c;
    }
    std::istringstream in(text);
    std::string line;
    bool status_seen = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "status") {
            std::string v;
            ls >> v;
            if (v != "feasible" && v != "infeasible") throw std::invalid_argument("bad status '" + v + "'");
            c.feasible = v == "feasible";
            status_seen = true;
        } else if (key == "weight" && c.feasible) {
            ls >> c.weight;
        } else if (key == "set" || key == "neighborhood") {
            VertexSet& dst = key == "set" ? c.set : c.neighborhood;
            for (Vertex v; ls >> v;) dst.push_back(v);
        }
    }
    if (!status_seen) throw std::invalid_argument("solution file has no status line");
    return c;
}

int cmd_verify(const std::string& inst_path, const std::string& sol_path) {
    InstanceFile f = load_instance(inst_path);
    ClaimedSolution c = parse_solution(read_file(sol_path));
    if (!c.feasible) {
        SolveOptions o;
        Outcome truth = f.boundaried() ? solve_file(f, o, "oracle") : run_oracle(to_secluded(f));
        if (truth.solution) {
            std::cout << "invalid: claimed infeasible, but weight " << truth.solution->weight << " is attainable\n";
            return kError;
        }
        std::cout << "valid: infeasible\n";
        return kOk;
    }
    if (make_set(c.set) != c.set) {
        std::cout << "invalid: set is not sorted and duplicate-free\n";
        return kError;
    }
    std::optional<std::string> why;
    Neighborhood kind = f.kind;
    if (f.boundaried()) {
        why = check_solution(to_boundaried(f), c.set);
    } else {
        why = check_solution(to_secluded(f), c.set);
    }
    if (!why && f.graph.weight_of(c.set) != c.weight) why = "claimed weight " + std::to_string(c.weight) + " differs";
    if (!why && neighbors(f.graph, kind, c.set) != c.neighborhood) why = "claimed neighborhood differs";
    if (why) {
        std::cout << "invalid: " << *why << '\n';
        return kError;
    }
    std::cout << "valid: weight " << c.weight << '\n';
    return kOk;
}

int cmd_compare(const std::string& path, const SolveOptions& o) {
    InstanceFile f = load_instance(path);
    Outcome mine = solve_file(f, o, o.solver);
    Outcome truth = solve_file(f, o, "oracle");
    auto show = [](const Outcome& x) {
        return x.solution ? std::to_string(x.solution->weight) : std::string("infeasible");
    };
    bool same = mine.solution.has_value() == truth.solution.has_value() &&
                (!mine.solution || mine.solution->weight == truth.solution->weight);
    if (mine.solution) {
        auto why = f.boundaried() ? check_solution(to_boundaried(f), mine.solution->set)
                                  : check_solution(to_secluded(f), mine.solution->set);
        if (why) {
            std::cout << "mismatch " << instance_id(path) << ' ' << mine.solver << " returned an invalid set: " << *why << '\n';
            return kError;
        }
    }
    std::cout << (same ? "match " : "mismatch ") << instance_id(path) << ' ' << mine.solver << '=' << show(mine) << ' '
              << truth.solver << '=' << show(truth) << '\n';
    return same ? kOk : kError;
}

int cmd_bench(const std::string& dir, const std::string& out_path, const SolveOptions& o, int threads) {
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".inst") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    std::vector<std::string> rows(files.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < files.size();) {
            std::string id = instance_id(files[i]);
            try {
                InstanceFile f = load_instance(files[i]);
                Outcome r = solve_file(f, o, o.solver);
                rows[i] = id + ',' + r.solver + ',' + (r.solution ? std::to_string(r.solution->weight) : "infeasible") +
                          ',' + std::to_string(f.k) + ',' + std::to_string(r.nodes) + ',' + std::to_string(r.micros);
            } catch (const std::exception& e) {
                rows[i] = id + ",error,error,0,0,0";
            }
        }
    };
    threads = std::max(1, threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    std::ostringstream csv;
    csv << "instance,solver,weight,k,nodes,micros\n";
    for (const auto& r : rows) csv << r << '\n';
    if (out_path.empty() || out_path == "-")
        std::cout << csv.str();
    else
        write_file(out_path, csv.str());
    std::size_t errors = std::count_if(rows.begin(), rows.end(), [](const std::string& r) { return r.find(",error,") != std::string::npos; });
    std::cerr << "bench: " << files.size() << " instances, " << errors << " errors\n";
    return errors ? kError : kOk;
}

unsigned parse_rules(const std::string& spec) {
    unsigned mask = 0;
    std::istringstream in(spec);
    for (std::string tok; std::getline(in, tok, ',');) {
        int r = std::stoi(tok);
        if (r < 1 || r > 6) throw std::invalid_argument("rules are numbered 1 to 6");
        mask |= 1u << (r - 1);
    }
    return mask;
}

int cmd_reduce(const std::string& path, const std::string& rules, const std::string& trace_path) {
    InstanceFile f = load_instance(path);
    ReduceResult r = reduce_exhaustively(to_boundaried(f), parse_rules(rules));
    if (!trace_path.empty()) {
        json t;
        t["infeasible"] = r.infeasible;
        t["applications"] = r.applications;
        t["records"] = json::array();
        for (const auto& rec : r.trace.records) {
            json e;
            e["rule"] = rec.rule;
            e["old_of_new"] = rec.old_of_new;
            e["expansions"] = json::array();
            for (const auto& [trigger, restore] : rec.expansions) e["expansions"].push_back({{"trigger", trigger}, {"restore", restore}});
            t["records"].push_back(e);
        }
        write_file(trace_path, t.dump(1) + '\n');
    }
    if (r.infeasible) {
        std::cout << "infeasible\n";
        return kInfeasible;
    }
    InstanceFile out = from_boundaried(r.instance);
    std::cout << serialize_instance(out);
    return kOk;
}

int cmd_gadget(const std::string& type, const std::string& path, int k, const std::string& family, bool edge_path) {
    auto [n, edges] = parse_undirected(read_file(path));
    UndirectedGraph g = make_undirected(n, edges);
    Gadget gd;
    std::string ref;
    if (type == "clique-to-tsscs") {
        gd = reduce_clique_to_tsscs(g, k);
    } else if (type == "clique-to-ffree") {
        if (family.empty()) throw std::invalid_argument("clique-to-ffree needs --family");
        gd = reduce_clique_to_ffree(g, k, parse_family(read_file(family)), edge_path);
        ref = family;
    } else if (type == "clique-to-dag") {
        gd = reduce_clique_to_dag(g, k);
    } else {
        throw std::invalid_argument("unknown gadget '" + type + "'");
    }
    std::cout << serialize_instance(from_secluded(gd.instance, ref));
    return kOk;
}

struct GenerateOptions {
    std::string model;
    int n = 8;
    double p = 0.3;
    std::uint64_t seed = 1;
    Weight max_weight = 1;
    int clique = 4;
    int block = 5;
    int count = 2;
    std::string kind = "total";
    std::string property = "scc";
    int k = 1;
    Weight w = 0;
};

int cmd_generate(const GenerateOptions& o) {
    Digraph g;
    if (o.model == "gnp")
        g = gnp(o.n, o.p, o.seed, o.max_weight);
    else if (o.model == "tournament")
        g = random_tournament(o.n, o.seed, o.max_weight);
    else if (o.model == "planted-clique")
        g = planted_clique(o.n, o.clique, o.k, o.seed);
    else if (o.model == "chained-cliques")
        g = chained_cliques(o.block, o.count, o.seed);
    else
        throw std::invalid_argument("unknown model '" + o.model + "'");
    std::ostringstream header;
    header << "p secluded " << g.size() << " 0 " << o.kind << ' ' << o.property << ' ' << o.k << ' ' << o.w << '\n';
    InstanceFile f = parse_instance(header.str());
    f.graph = g;
    std::cout << serialize_instance(f);
    return kOk;
}

void add_solve_flags(CLI::App* cmd, SolveOptions& o) {
    cmd->add_option("--solver", o.solver, "auto, branching, recursive or oracle")
        ->check(CLI::IsMember({"auto", "branching", "recursive", "oracle"}));
    cmd->add_option("--q", o.q, "separation threshold q of the recursive solver")->check(CLI::NonNegativeNumber);
    cmd->add_option("--set-family", o.set_family, "exhaustive or randomized:<seed>:<eps>");
    cmd->add_flag("--timing", o.timing, "report wall time (otherwise 0 so output is reproducible)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secluded subgraph solvers"};
    app.require_subcommand(1);
    int code = kOk;

    SolveOptions so;
    std::string file, second;
    auto* solve = app.add_subcommand("solve", "solve an instance");
    solve->add_option("file", file)->required();
    add_solve_flags(solve, so);
    solve->add_flag("--json", so.json, "emit one JSON record");
    solve->add_flag("--complementations", so.complementations, "print every boundary complementation");

    std::string rules = "1,2,3,4,5,6", trace;
    auto* reduce = app.add_subcommand("reduce", "apply reduction rules to a boundaried instance");
    reduce->add_option("file", file)->required();
    reduce->add_option("--rules", rules, "comma separated rule numbers");
    reduce->add_option("--emit-trace", trace, "write the lifting trace as JSON");

    std::string gadget_type, family;
    int gadget_k = 2;
    bool edge_path = false;
    auto* gadget = app.add_subcommand("gadget", "build a hardness gadget from a clique instance");
    gadget->add_option("type", gadget_type)->required()->check(CLI::IsMember({"clique-to-tsscs", "clique-to-ffree", "clique-to-dag"}));
    gadget->add_option("file", file)->required();
    gadget->add_option("-k", gadget_k, "clique size")->required();
    gadget->add_option("--family", family, "forbidden family file");
    gadget->add_flag("--edge-path", edge_path, "one connector vertex per edge, chained in a path");

    auto* verify = app.add_subcommand("verify", "check a solution file against an instance");
    verify->add_option("instance", file)->required();
    verify->add_option("solution", second)->required();

    std::string suite, out = "-";
    int threads = 1;
    auto* bench = app.add_subcommand("bench", "solve every .inst file of a directory");
    bench->add_option("--suite", suite)->required();
    bench->add_option("--out", out, "CSV output path, - for stdout");
    bench->add_option("--threads", threads)->check(CLI::PositiveNumber);
    add_solve_flags(bench, so);

    auto* compare = app.add_subcommand("compare", "compare a solver against the oracle");
    compare->add_option("file", file)->required();
    add_solve_flags(compare, so);

    GenerateOptions go;
    auto* generate = app.add_subcommand("generate", "write a random instance");
    generate->add_option("model", go.model)->required()->check(CLI::IsMember({"gnp", "tournament", "planted-clique", "chained-cliques"}));
    generate->add_option("--n", go.n);
    generate->add_option("--p", go.p);
    generate->add_option("--seed", go.seed);
    generate->add_option("--max-weight", go.max_weight);
    generate->add_option("--clique", go.clique);
    generate->add_option("--block", go.block);
    generate->add_option("--count", go.count);
    generate->add_option("--kind", go.kind)->check(CLI::IsMember({"in", "out", "total"}));
    generate->add_option("--property", go.property);
    generate->add_option("--k", go.k);
    generate->add_option("--w", go.w);

    CLI11_PARSE(app, argc, argv);
    try {
        if (*solve) code = cmd_solve(file, so);
        else if (*reduce) code = cmd_reduce(file, rules, trace);
        else if (*gadget) code = cmd_gadget(gadget_type, file, gadget_k, family, edge_path);
        else if (*verify) code = cmd_verify(file, second);
        else if (*bench) code = cmd_bench(suite, out, so, threads);
        else if (*compare) code = cmd_compare(file, so);
        else if (*generate) code = cmd_generate(go);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return code;
}
