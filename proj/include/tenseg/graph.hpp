#pragma once

#include <compare>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tenseg/errors.hpp"

namespace tenseg {

using VertexId = int;

/// Undirected edge, stored canonically with u < v. {i,j} and {j,i} compare
/// equal by construction.
struct Edge {
    VertexId u;
    VertexId v;

    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw Error("Edge: self-loop " + std::to_string(a));
    }

    auto operator<=>(const Edge&) const = default;

    bool contains(VertexId w) const { return w == u || w == v; }
    VertexId other(VertexId w) const { return w == u ? v : u; }
    std::string str() const { return "{" + std::to_string(u) + "," + std::to_string(v) + "}"; }
};

/// Abstract graph: ordered vertex set plus canonical edge set. Vertex
/// identifiers are positive integers. Iteration over edges() is always in
/// lexicographic (i<j) order.
class Graph {
public:
    Graph() = default;
    Graph(const std::vector<VertexId>& vertices, const std::vector<Edge>& edges);

    const std::set<VertexId>& vertices() const { return vertices_; }
    const std::set<Edge>& edges() const { return edges_; }
    std::size_t vertexCount() const { return vertices_.size(); }
    std::size_t edgeCount() const { return edges_.size(); }

    bool hasVertex(VertexId v) const { return vertices_.count(v) != 0; }
    bool hasEdge(const Edge& e) const { return edges_.count(e) != 0; }

    void addVertex(VertexId v);
    void addEdge(const Edge& e);     // endpoints must exist; duplicate is an error
    void removeEdge(const Edge& e);  // absent edge is an error

    int degree(VertexId v) const;                 // throws UnknownVertexError
    std::vector<VertexId> neighbors(VertexId v) const;  // ascending

    bool operator==(const Graph&) const = default;

private:
    std::set<VertexId> vertices_;
    std::set<Edge> edges_;
};

/// Free-function form of Graph::degree.
int degree(const Graph& g, VertexId v);

/// General-position realization of K_{d+2}, identified combinatorially by
/// its member set and the apex chosen at extraction time.
struct Atom {
    VertexId apex = 0;
    std::set<VertexId> members;

    bool operator==(const Atom&) const = default;
    std::vector<VertexId> membersAscending() const {
        return {members.begin(), members.end()};
    }
};

/// Step 2.1 of the combinatorial decomposition: a vertex of degree <= d
/// loses all its incident edges.
struct RemovalStep {
    VertexId vertex = 0;
    std::set<Edge> removed_edges;
    bool operator==(const RemovalStep&) const = default;
};

/// Steps 2.2 / 2.3: an atom is extracted. A 2.3 step removes one apex edge,
/// a 2.2 step removes d+1 of them; both insert the missing edges among the
/// non-apex members.
struct ExtractionStep {
    Atom atom;
    std::set<Edge> removed_edges;
    std::set<Edge> inserted_edges;
    bool operator==(const ExtractionStep&) const = default;
};

using TraceStep = std::variant<RemovalStep, ExtractionStep>;

/// Ordered record of one run of the combinatorial decomposition. Replaying
/// the steps from input_graph must end with an edgeless graph.
struct DecompositionTrace {
    int dim = 0;
    Graph input_graph;
    std::vector<TraceStep> steps;

    std::vector<Atom> atoms() const;

    bool operator==(const DecompositionTrace&) const = default;
};

/// Applies the trace steps one by one and returns the intermediate graph
/// after each step. Throws MalformedTraceError if a step is inconsistent
/// with the current graph (removing an absent edge, inserting a present
/// one, removed extraction edges not incident to the apex or outside the
/// atom, inserted edges touching the apex or outside the atom).
std::vector<Graph> replay(const DecompositionTrace& trace);

}  // namespace tenseg
