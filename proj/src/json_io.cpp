#include "tenseg/json_io.hpp"

namespace tenseg {

namespace {

json edgeToJson(const Edge& e) { return json::array({e.u, e.v}); }

Edge edgeFromJson(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw FormatError("edge must be a pair of integers, got " + j.dump());
    const int a = j[0].get<int>(), b = j[1].get<int>();
    if (a == b) throw FormatError("edge endpoints must differ, got " + j.dump());
    return Edge(a, b);
}

json edgeSetToJson(const std::set<Edge>& edges) {
    json arr = json::array();
    for (const Edge& e : edges) arr.push_back(edgeToJson(e));
    return arr;
}

std::set<Edge> edgeSetFromJson(const json& j, const char* what) {
    if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
    std::set<Edge> out;
    for (const auto& e : j) out.insert(edgeFromJson(e));
    return out;
}

Rational rationalFromJson(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw FormatError("rational must be a \"p/q\" string, got " + j.dump());
    return Rational::fromString(j.get<std::string>());
}

json pointToJson(const RatVector& p) {
    json arr = json::array();
    for (Eigen::Index c = 0; c < p.size(); ++c) arr.push_back(p(c).str());
    return arr;
}

RatVector pointFromJson(const json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw FormatError("point must be an array of " + std::to_string(dim) + " rationals");
    RatVector p(dim);
    for (int c = 0; c < dim; ++c) p(c) = rationalFromJson(j[static_cast<std::size_t>(c)]);
    return p;
}

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw FormatError(std::string("missing field \"") + key + "\"");
    return *it;
}

}  // namespace

json toJson(const Graph& g, int dim) {
    json j;
    j["d"] = dim;
    j["vertices"] = json::array();
    for (VertexId v : g.vertices()) j["vertices"].push_back(v);
    j["edges"] = edgeSetToJson(g.edges());
    return j;
}

std::pair<Graph, int> graphFromJson(const json& j) {
    if (!j.is_object()) throw FormatError("graph must be a JSON object");
    const json& dv = field(j, "d");
    if (!dv.is_number_integer()) throw FormatError("graph field \"d\" must be an integer");
    const int dim = dv.get<int>();
    Graph g;
    for (const auto& v : field(j, "vertices")) {
        if (!v.is_number_integer()) throw FormatError("vertices must be integers");
        g.addVertex(v.get<int>());
    }
    try {
        for (const auto& e : field(j, "edges")) g.addEdge(edgeFromJson(e));
    } catch (const Error& err) {
        throw FormatError(std::string("bad edge list: ") + err.what());
    }
    return {std::move(g), dim};
}

json toJson(const DecompositionTrace& trace) {
    json j;
    j["d"] = trace.dim;
    j["input_graph"] = toJson(trace.input_graph, trace.dim);
    json steps = json::array();
    for (const TraceStep& s : trace.steps) {
        json step;
        if (const auto* rm = std::get_if<RemovalStep>(&s)) {
            step["type"] = "removal";
            step["vertex"] = rm->vertex;
            step["removed_edges"] = edgeSetToJson(rm->removed_edges);
        } else {
            const auto& ex = std::get<ExtractionStep>(s);
            step["type"] = "extraction";
            step["apex"] = ex.atom.apex;
            step["members"] = json::array();
            for (VertexId v : ex.atom.members) step["members"].push_back(v);
            step["removed_edges"] = edgeSetToJson(ex.removed_edges);
            step["inserted_edges"] = edgeSetToJson(ex.inserted_edges);
        }
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    return j;
}

DecompositionTrace traceFromJson(const json& j) {
    DecompositionTrace trace;
    auto [g, dim] = graphFromJson(field(j, "input_graph"));
    trace.input_graph = std::move(g);
    const json& dv = field(j, "d");
    if (!dv.is_number_integer()) throw FormatError("trace field \"d\" must be an integer");
    trace.dim = dv.get<int>();
    for (const auto& step : field(j, "steps")) {
        const std::string type = field(step, "type").get<std::string>();
        if (type == "removal") {
            RemovalStep rm;
            rm.vertex = field(step, "vertex").get<int>();
            rm.removed_edges = edgeSetFromJson(field(step, "removed_edges"), "removed_edges");
            trace.steps.emplace_back(std::move(rm));
        } else if (type == "extraction") {
            ExtractionStep ex;
            ex.atom.apex = field(step, "apex").get<int>();
            for (const auto& m : field(step, "members")) ex.atom.members.insert(m.get<int>());
            ex.removed_edges = edgeSetFromJson(field(step, "removed_edges"), "removed_edges");
            ex.inserted_edges = edgeSetFromJson(field(step, "inserted_edges"), "inserted_edges");
            trace.steps.emplace_back(std::move(ex));
        } else {
            throw FormatError("unknown trace step type \"" + type + "\"");
        }
    }
    return trace;
}

json toJson(const Framework& f) {
    json j = toJson(f.graph, f.dim);
    json points;
    for (const auto& [v, p] : f.points) points[std::to_string(v)] = pointToJson(p);
    j["points"] = std::move(points);
    return j;
}

std::map<VertexId, RatVector> pointsFromJson(const json& j, int dim) {
    if (!j.is_object()) throw FormatError("points must be an object keyed by vertex id");
    std::map<VertexId, RatVector> out;
    for (const auto& [key, value] : j.items()) {
        VertexId v = 0;
        try {
            v = std::stoi(key);
        } catch (const std::exception&) {
            throw FormatError("point key \"" + key + "\" is not a vertex id");
        }
        out[v] = pointFromJson(value, dim);
    }
    return out;
}

Framework frameworkFromJson(const json& j) {
    Framework f;
    auto [g, dim] = graphFromJson(j);
    f.graph = std::move(g);
    f.dim = dim;
    f.points = pointsFromJson(field(j, "points"), dim);
    try {
        f.validate();
    } catch (const Error& err) {
        throw FormatError(std::string("invalid framework: ") + err.what());
    }
    return f;
}

json toJson(const Stress& w) {
    json j;
    json arr = json::array();
    for (const auto& [e, t] : w.tensions()) arr.push_back(json::array({e.u, e.v, t.str()}));
    j["edges"] = std::move(arr);
    return j;
}

Stress stressFromJson(const json& j) {
    Stress w;
    for (const auto& entry : field(j, "edges")) {
        if (!entry.is_array() || entry.size() != 3)
            throw FormatError("stress entry must be [i, j, \"p/q\"], got " + entry.dump());
        const Edge e = edgeFromJson(json::array({entry[0], entry[1]}));
        if (w.contains(e)) throw FormatError("duplicate stress entry for edge " + e.str());
        w.set(e, rationalFromJson(entry[2]));
    }
    return w;
}

json toJson(const NecessityVerdict& v) {
    json j;
    j["holds"] = v.holds;
    if (v.witness) j["witness"] = edgeToJson(*v.witness);
    return j;
}

json toJson(const CharacterizationResult& r) {
    json j;
    j["d"] = r.dim;
    j["graph"] = toJson(r.graph, r.dim);
    json base;
    for (const auto& [v, p] : r.base_points) base[std::to_string(v)] = pointToJson(p);
    j["base_points"] = std::move(base);
    json uv;
    for (const auto& [v, vars] : r.unknown_coords) {
        json names = json::array();
        for (const Variable& var : vars) names.push_back(var.name());
        uv[std::to_string(v)] = std::move(names);
    }
    j["unknown_vertices"] = std::move(uv);
    json unknowns = json::array();
    for (const Variable& var : r.unknowns) unknowns.push_back(var.name());
    j["unknowns"] = std::move(unknowns);
    auto polyArray = [](const std::vector<Polynomial>& ps) {
        json arr = json::array();
        for (const auto& p : ps) arr.push_back(p.str());
        return arr;
    };
    j["equations"] = polyArray(r.equations);
    j["negated"] = polyArray(r.negated);
    j["side_conditions"] = polyArray(r.side_conditions);
    j["inconsistent"] = r.inconsistent;
    return j;
}

CharacterizationResult resultFromJson(const json& j) {
    CharacterizationResult r;
    const json& dv = field(j, "d");
    if (!dv.is_number_integer()) throw FormatError("result field \"d\" must be an integer");
    r.dim = dv.get<int>();
    auto [g, dim] = graphFromJson(field(j, "graph"));
    r.graph = std::move(g);
    r.base_points = pointsFromJson(field(j, "base_points"), r.dim);
    for (const auto& [key, names] : field(j, "unknown_vertices").items()) {
        VertexId v = 0;
        try {
            v = std::stoi(key);
        } catch (const std::exception&) {
            throw FormatError("unknown_vertices key \"" + key + "\" is not a vertex id");
        }
        std::vector<Variable> vars;
        for (const auto& n : names) {
            auto var = Variable::parse(n.get<std::string>());
            if (!var) throw FormatError("bad variable name \"" + n.get<std::string>() + "\"");
            vars.push_back(*var);
        }
        r.unknown_coords[v] = std::move(vars);
        r.free_vertices.push_back(v);
    }
    for (const auto& n : field(j, "unknowns")) {
        auto var = Variable::parse(n.get<std::string>());
        if (!var) throw FormatError("bad variable name \"" + n.get<std::string>() + "\"");
        r.unknowns.push_back(*var);
    }
    auto polyList = [](const json& arr) {
        std::vector<Polynomial> out;
        for (const auto& s : arr) out.push_back(Polynomial::parse(s.get<std::string>()));
        return out;
    };
    r.equations = polyList(field(j, "equations"));
    r.negated = polyList(field(j, "negated"));
    r.side_conditions = polyList(field(j, "side_conditions"));
    r.inconsistent = field(j, "inconsistent").get<bool>();
    return r;
}

json toJson(const std::map<Variable, Rational>& assignment) {
    json j;
    for (const auto& [v, val] : assignment) j[v.name()] = val.str();
    return j;
}

std::map<Variable, Rational> assignmentFromJson(const json& j) {
    if (!j.is_object()) throw FormatError("assignment must be an object of variable -> rational");
    std::map<Variable, Rational> out;
    for (const auto& [key, value] : j.items()) {
        auto var = Variable::parse(key);
        if (!var) throw FormatError("bad variable name \"" + key + "\"");
        out[*var] = rationalFromJson(value);
    }
    return out;
}

}  // namespace tenseg
