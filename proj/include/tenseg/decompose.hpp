#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tenseg/graph.hpp"

namespace tenseg {

/// Deterministic choice rules for the combinatorial decomposition. The
/// defaults pick the smallest-identifier vertex among those of minimum
/// positive degree, and the d+1 smallest-identifier neighbors. Custom rules
/// must be deterministic functions of the current graph; `first_vertex`
/// overrides the very first vertex selection so that specific runs can be
/// reproduced.
struct SelectionPolicy {
    std::optional<VertexId> first_vertex;

    /// Optional override: vertex to process next (must have degree >= 1).
    std::function<VertexId(const Graph&)> vertex_choice;

    /// Optional override: given the current graph, an apex and d, return
    /// d+1 of its neighbors.
    std::function<std::vector<VertexId>(const Graph&, VertexId, int)> neighbor_choice;

    static SelectionPolicy startingAt(VertexId v) {
        SelectionPolicy p;
        p.first_vertex = v;
        return p;
    }
};

/// Outcome of the necessary-condition test: holds, or a witness edge of the
/// input graph contained in no atom.
struct NecessityVerdict {
    bool holds = false;
    std::optional<Edge> witness;
};

/// Combinatorial decomposition. Peels the graph one vertex at a time:
/// degree <= d removes the incident edges, degree d+1 extracts the atom of
/// the vertex and all its neighbors, larger degrees peel one apex edge at a
/// time (inserting the missing edges among the chosen d+1 neighbors) until
/// the degree drops to d+1. Throws UnsupportedDimensionError for d < 2.
DecompositionTrace combinatorialDecompose(const Graph& g, int d,
                                          const SelectionPolicy& policy = {});

/// Necessary condition for the graph to underlie a tensegrity: every edge
/// of the input graph has both endpoints inside some atom of the trace.
/// The witness is the lexicographically first failing edge.
NecessityVerdict necessaryCondition(const DecompositionTrace& trace);

/// True iff every extracted atom but the last one inserted at least one
/// edge. Traces with no atoms are edge-inserting vacuously.
bool isEdgeInserting(const DecompositionTrace& trace);

}  // namespace tenseg
