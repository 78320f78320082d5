#pragma once

#include <json.hpp>

#include "tenseg/characterize.hpp"
#include "tenseg/decompose.hpp"
#include "tenseg/framework.hpp"

namespace tenseg {

using nlohmann::json;

// All readers throw FormatError on malformed documents. Writers emit
// deterministic output: ascending vertices, lexicographic edges, object
// keys sorted.

json toJson(const Graph& g, int dim);
std::pair<Graph, int> graphFromJson(const json& j);

json toJson(const DecompositionTrace& trace);
DecompositionTrace traceFromJson(const json& j);

json toJson(const Framework& f);
Framework frameworkFromJson(const json& j);

json toJson(const Stress& w);
Stress stressFromJson(const json& j);

json toJson(const NecessityVerdict& v);

json toJson(const CharacterizationResult& r);
CharacterizationResult resultFromJson(const json& j);

json toJson(const std::map<Variable, Rational>& assignment);
std::map<Variable, Rational> assignmentFromJson(const json& j);

std::map<VertexId, RatVector> pointsFromJson(const json& j, int dim);

}  // namespace tenseg
