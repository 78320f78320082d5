#include "tenseg/decompose.hpp"

#include <algorithm>
#include <limits>

namespace tenseg {

namespace {

VertexId defaultVertexChoice(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    VertexId chosen = 0;
    for (VertexId v : g.vertices()) {
        const int deg = g.degree(v);
        if (deg >= 1 && deg < best) {
            best = deg;
            chosen = v;
        }
    }
    return chosen;  // 0 when no vertex has an edge
}

std::vector<VertexId> defaultNeighborChoice(const Graph& g, VertexId apex, int d) {
    std::vector<VertexId> nbrs = g.neighbors(apex);  // ascending
    nbrs.resize(static_cast<std::size_t>(d) + 1);
    return nbrs;
}

}  // namespace

DecompositionTrace combinatorialDecompose(const Graph& g, int d, const SelectionPolicy& policy) {
    if (d < 2) throw UnsupportedDimensionError("combinatorialDecompose: dimension must be >= 2, got " +
                                               std::to_string(d));
    DecompositionTrace trace;
    trace.dim = d;
    trace.input_graph = g;

    Graph cur = g;
    bool first = true;
    while (cur.edgeCount() != 0) {
        VertexId a;
        if (first && policy.first_vertex) {
            a = *policy.first_vertex;
            if (!cur.hasVertex(a))
                throw UnknownVertexError("combinatorialDecompose: first vertex " + std::to_string(a) +
                                         " is not in the graph");
            if (cur.degree(a) == 0)
                throw Error("combinatorialDecompose: first vertex " + std::to_string(a) +
                            " has no incident edges");
        } else if (policy.vertex_choice) {
            a = policy.vertex_choice(cur);
        } else {
            a = defaultVertexChoice(cur);
        }
        first = false;

        int deg = cur.degree(a);
        if (deg <= d) {
            RemovalStep rm;
            rm.vertex = a;
            for (const Edge& e : cur.edges())
                if (e.contains(a)) rm.removed_edges.insert(e);
            for (const Edge& e : rm.removed_edges) cur.removeEdge(e);
            trace.steps.emplace_back(std::move(rm));
            continue;
        }

        // 2.3 peels one apex edge per step until the degree is d+1, then 2.2
        // removes the remaining d+1 apex edges.
        while (deg >= d + 1) {
            std::vector<VertexId> nbrs = policy.neighbor_choice
                                             ? policy.neighbor_choice(cur, a, d)
                                             : defaultNeighborChoice(cur, a, d);
            if (nbrs.size() != static_cast<std::size_t>(d) + 1)
                throw Error("combinatorialDecompose: neighbor choice must return d+1 vertices");

            ExtractionStep ex;
            ex.atom.apex = a;
            ex.atom.members.insert(a);
            ex.atom.members.insert(nbrs.begin(), nbrs.end());
            if (ex.atom.members.size() != static_cast<std::size_t>(d) + 2)
                throw Error("combinatorialDecompose: neighbor choice returned duplicates or the apex");

            if (deg == d + 1) {
                for (VertexId n : nbrs) ex.removed_edges.insert(Edge(a, n));
            } else {
                // lexicographically smallest apex edge among the chosen neighbors
                Edge smallest(a, nbrs.front());
                for (VertexId n : nbrs) smallest = std::min(smallest, Edge(a, n));
                ex.removed_edges.insert(smallest);
            }
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                    Edge e(nbrs[i], nbrs[j]);
                    if (!cur.hasEdge(e)) ex.inserted_edges.insert(e);
                }

            for (const Edge& e : ex.removed_edges) cur.removeEdge(e);
            for (const Edge& e : ex.inserted_edges) cur.addEdge(e);
            trace.steps.emplace_back(std::move(ex));

            const int newDeg = cur.degree(a);
            if (newDeg == 0) break;  // the 2.2 step just ran
            deg = newDeg;
        }
    }
    return trace;
}

NecessityVerdict necessaryCondition(const DecompositionTrace& trace) {
    replay(trace);  // validates; throws MalformedTraceError otherwise
    const std::vector<Atom> atoms = trace.atoms();
    NecessityVerdict verdict;
    verdict.holds = true;
    for (const Edge& e : trace.input_graph.edges()) {
        bool covered = false;
        for (const Atom& atom : atoms) {
            if (atom.members.count(e.u) && atom.members.count(e.v)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            verdict.holds = false;
            verdict.witness = e;
            break;
        }
    }
    return verdict;
}

bool isEdgeInserting(const DecompositionTrace& trace) {
    replay(trace);
    std::vector<const ExtractionStep*> extractions;
    for (const TraceStep& s : trace.steps)
        if (const auto* ex = std::get_if<ExtractionStep>(&s)) extractions.push_back(ex);
    for (std::size_t i = 0; i + 1 < extractions.size(); ++i)
        if (extractions[i]->inserted_edges.empty()) return false;
    return true;
}

}  // namespace tenseg
