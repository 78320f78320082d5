#include "tenseg/graph.hpp"

#include <algorithm>

namespace tenseg {

Graph::Graph(const std::vector<VertexId>& vertices, const std::vector<Edge>& edges) {
    for (VertexId v : vertices) addVertex(v);
    for (const Edge& e : edges) {
        if (edges_.count(e)) throw Error("Graph: duplicate edge " + e.str());
        addEdge(e);
    }
}

void Graph::addVertex(VertexId v) {
    if (v <= 0) throw Error("Graph: vertex identifiers must be positive, got " + std::to_string(v));
    vertices_.insert(v);
}

void Graph::addEdge(const Edge& e) {
    if (!hasVertex(e.u) || !hasVertex(e.v))
        throw UnknownVertexError("Graph: edge " + e.str() + " has an endpoint outside the vertex set");
    if (!edges_.insert(e).second) throw Error("Graph: edge " + e.str() + " already present");
}

void Graph::removeEdge(const Edge& e) {
    if (edges_.erase(e) == 0) throw Error("Graph: edge " + e.str() + " not present");
}

int Graph::degree(VertexId v) const {
    if (!hasVertex(v)) throw UnknownVertexError("degree: unknown vertex " + std::to_string(v));
    int deg = 0;
    for (const Edge& e : edges_)
        if (e.contains(v)) ++deg;
    return deg;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
    if (!hasVertex(v)) throw UnknownVertexError("neighbors: unknown vertex " + std::to_string(v));
    std::vector<VertexId> out;
    for (const Edge& e : edges_)
        if (e.contains(v)) out.push_back(e.other(v));
    std::sort(out.begin(), out.end());
    return out;
}

int degree(const Graph& g, VertexId v) { return g.degree(v); }

std::vector<Atom> DecompositionTrace::atoms() const {
    std::vector<Atom> out;
    for (const TraceStep& s : steps)
        if (const auto* ex = std::get_if<ExtractionStep>(&s)) out.push_back(ex->atom);
    return out;
}

std::vector<Graph> replay(const DecompositionTrace& trace) {
    Graph g = trace.input_graph;
    std::vector<Graph> stages;
    stages.reserve(trace.steps.size());
    const std::size_t atomSize = static_cast<std::size_t>(trace.dim) + 2;

    for (std::size_t idx = 0; idx < trace.steps.size(); ++idx) {
        const TraceStep& step = trace.steps[idx];
        const std::string at = "step " + std::to_string(idx) + ": ";

        if (const auto* rm = std::get_if<RemovalStep>(&step)) {
            if (!g.hasVertex(rm->vertex))
                throw MalformedTraceError(at + "removal of unknown vertex");
            for (const Edge& e : rm->removed_edges) {
                if (!e.contains(rm->vertex))
                    throw MalformedTraceError(at + "removed edge " + e.str() + " not incident to vertex " +
                                              std::to_string(rm->vertex));
                if (!g.hasEdge(e)) throw MalformedTraceError(at + "removing absent edge " + e.str());
                g.removeEdge(e);
            }
            if (g.degree(rm->vertex) != 0)
                throw MalformedTraceError(at + "removal step leaves incident edges at vertex " +
                                          std::to_string(rm->vertex));
        } else {
            const auto& ex = std::get<ExtractionStep>(step);
            const Atom& atom = ex.atom;
            if (atom.members.size() != atomSize)
                throw MalformedTraceError(at + "atom has " + std::to_string(atom.members.size()) +
                                          " members, expected " + std::to_string(atomSize));
            if (!atom.members.count(atom.apex))
                throw MalformedTraceError(at + "apex is not an atom member");
            if (ex.removed_edges.size() != 1 &&
                ex.removed_edges.size() != static_cast<std::size_t>(trace.dim) + 1)
                throw MalformedTraceError(at + "extraction must remove 1 or d+1 apex edges, removes " +
                                          std::to_string(ex.removed_edges.size()));
            for (const Edge& e : ex.removed_edges) {
                if (!e.contains(atom.apex))
                    throw MalformedTraceError(at + "removed edge " + e.str() + " not incident to the apex");
                if (!atom.members.count(e.other(atom.apex)))
                    throw MalformedTraceError(at + "removed edge " + e.str() + " leaves the atom");
                if (!g.hasEdge(e)) throw MalformedTraceError(at + "removing absent edge " + e.str());
                g.removeEdge(e);
            }
            for (const Edge& e : ex.inserted_edges) {
                if (e.contains(atom.apex))
                    throw MalformedTraceError(at + "inserted edge " + e.str() + " touches the apex");
                if (!atom.members.count(e.u) || !atom.members.count(e.v))
                    throw MalformedTraceError(at + "inserted edge " + e.str() + " outside the atom");
                if (g.hasEdge(e)) throw MalformedTraceError(at + "inserting present edge " + e.str());
                g.addEdge(e);
            }
        }
        stages.push_back(g);
    }

    if (g.edgeCount() != 0)
        throw MalformedTraceError("trace does not end with an edgeless graph (" +
                                  std::to_string(g.edgeCount()) + " edges left)");
    if (stages.empty()) stages.push_back(g);
    return stages;
}

}  // namespace tenseg
