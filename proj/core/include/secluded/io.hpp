#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "secluded/instance.hpp"

namespace secluded {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

// Contents of an instance file. `family_ref` is the path written after "ffree:".
struct InstanceFile {
    Digraph graph;
    Neighborhood kind = Neighborhood::Total;
    Property property;
    std::string family_ref;
    int k = 0;
    Weight w = 0;
    VertexSet include, exclude, terminals;
    VertexSet boundary;        // meaningful when has_boundary
    bool has_boundary = false; // otherwise B = V
    bool boundaried() const { return has_boundary || !include.empty() || !exclude.empty() || !terminals.empty(); }
};

using FamilyLoader = std::function<std::vector<Digraph>(const std::string& ref)>;

// Format:
//   p secluded <n> <m> <in|out|total> <property> <k> <w>
//   v <id> <weight>      (optional, weight 1 otherwise)
//   e <u> <v>            (directed)
//   i|o|b|t <id>         (boundaried instances; "b -" for an empty boundary)
//   c ...                (comment)
// property: scc, alpha:<a>, clique, tournament, wcalpha:<a>, dag, ffree:<file>.
InstanceFile parse_instance(const std::string& text, const FamilyLoader& load_family = {});

// Canonical form: header, every v line, sorted e lines, then i, o, b, t lines.
std::string serialize_instance(const InstanceFile& f);

SecludedInstance to_secluded(const InstanceFile& f);
BoundariedInstance to_boundaried(const InstanceFile& f);
InstanceFile from_secluded(const SecludedInstance& inst, const std::string& family_ref = {});
InstanceFile from_boundaried(const BoundariedInstance& inst);

// Family file: "g <n>" opens a member, "e <u> <v>" adds an edge to it, "c" comments.
std::vector<Digraph> parse_family(const std::string& text);
std::string serialize_family(const std::vector<Digraph>& family);

// Undirected graph file: "p edge <n> <m>" then "e <u> <v>" lines.
std::pair<int, std::vector<std::pair<int, int>>> parse_undirected(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

Neighborhood parse_kind(const std::string& s);
std::string kind_name(Neighborhood k);

} // namespace secluded
