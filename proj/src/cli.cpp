#include "tenseg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

#include "tenseg/json_io.hpp"

namespace tenseg {

namespace {

json readJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError("malformed JSON in " + path + ": " + e.what());
    }
}

json stressJson(const Stress& w, bool approx) {
    json j = toJson(w);
    if (approx) {
        json arr = json::array();
        for (const auto& [e, t] : w.tensions()) arr.push_back(json::array({e.u, e.v, t.approx()}));
        j["edges_approx"] = std::move(arr);
    }
    return j;
}

int resolveDim(const CLI::Option* dimOpt, int dimFlag, int dimFromFile) {
    if (dimOpt->count() > 0) return dimFlag;
    return dimFromFile;
}

SelectionPolicy policyFromFlags(const CLI::Option* firstOpt, int firstVertex) {
    SelectionPolicy p;
    if (firstOpt->count() > 0) p.first_vertex = firstVertex;
    return p;
}

Graph octahedronGraph() {
    Graph g;
    for (int v = 1; v <= 6; ++v) g.addVertex(v);
    for (auto [a, b] : std::vector<std::pair<int, int>>{
             {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {2, 6}, {3, 4}, {3, 6}, {4, 5}, {4, 6}, {5, 6}})
        g.addEdge(Edge(a, b));
    return g;
}

Graph perspectiveGraph() {
    Graph g;
    for (int v = 1; v <= 6; ++v) g.addVertex(v);
    for (auto [a, b] : std::vector<std::pair<int, int>>{
             {1, 2}, {1, 4}, {1, 6}, {2, 3}, {2, 6}, {3, 4}, {3, 5}, {4, 5}, {5, 6}})
        g.addEdge(Edge(a, b));
    return g;
}

std::vector<VertexId> baseMembers(const DecompositionTrace& trace) {
    const auto atoms = trace.atoms();
    if (atoms.empty()) throw Error("trace extracts no atoms");
    return atoms.back().membersAscending();
}

bool singleEquationMatches(const std::vector<Polynomial>& equations, const Polynomial& expected) {
    if (equations.size() != 1) return false;
    return equations.front().monicCanonical() == expected.monicCanonical();
}

int demoOctahedron(std::ostream& out, bool approx) {
    const Graph g = octahedronGraph();
    const DecompositionTrace trace = combinatorialDecompose(g, 3, SelectionPolicy::startingAt(6));
    const BasePlacement base = defaultBasePlacement(3, baseMembers(trace));

    const Stress baseAtom = atomStress(3, base.points);
    Stress table = (Rational(1) / baseAtom.at(Edge(4, 5))) * baseAtom;
    const std::vector<std::pair<Edge, Rational>> expectedTable = {
        {Edge(1, 2), 2},  {Edge(1, 3), -2}, {Edge(1, 4), -2}, {Edge(1, 5), -2}, {Edge(2, 3), -1},
        {Edge(2, 4), -1}, {Edge(2, 5), -1}, {Edge(3, 4), 1},  {Edge(3, 5), 1},  {Edge(4, 5), 1}};
    bool tableOk = true;
    for (const auto& [e, v] : expectedTable) tableOk = tableOk && table.at(e) == v;

    const CharacterizationResult det = reconstruct(trace, base);
    const CharacterizationResult elim = characterizeViaElimination(trace, base);
    const Polynomial hyperboloid = Polynomial::parse("x6^2 - y6^2 - z6^2 - x6 + y6 + z6");
    const bool detOk = singleEquationMatches(det.equations, hyperboloid);
    const bool elimOk = singleEquationMatches(elim.equations, hyperboloid);

    std::map<Variable, Rational> sample = {{Variable::coordinate(6, 0), Rational(3, 7)},
                                           {Variable::coordinate(6, 1), Rational(1, 7)},
                                           {Variable::coordinate(6, 2), Rational(1, 7)}};
    const VerifyOutcome verified = verifyPoint(det, sample, buildFramework(det, sample));

    const bool pass = tableOk && detOk && elimOk && verified.ok;
    json report;
    report["demo"] = "octahedron";
    report["tension_table"] = stressJson(table, approx);
    report["hyperboloid"] = det.equations.empty() ? "" : det.equations.front().monicCanonical().str();
    report["characterization_det"] = toJson(det);
    report["equations_elim"] = json::array();
    for (const auto& p : elim.equations) report["equations_elim"].push_back(p.str());
    report["verify_sample_point"] = toJson(sample);
    report["verify_sample_ok"] = verified.ok;
    if (verified.witness) report["verify_sample_witness"] = stressJson(*verified.witness, approx);
    report["all_checks_passed"] = pass;
    out << report.dump(2) << "\n";
    return pass ? 0 : 1;
}

int demoPerspective(std::ostream& out, bool approx) {
    const Graph g = perspectiveGraph();
    const DecompositionTrace trace = combinatorialDecompose(g, 2, SelectionPolicy::startingAt(3));
    const BasePlacement base = defaultBasePlacement(2, baseMembers(trace));

    const CharacterizationResult det = reconstruct(trace, base);
    // concurrency of the lines p2p3, p5p6, p1p4 through the common point (2,1)
    const Polynomial concurrency = Polynomial::parse("x1*y3 - x3*y1 + y1*y3 - y3");
    const bool equationOk = singleEquationMatches(det.equations, concurrency);

    std::map<Variable, Rational> concurrent = {{Variable::coordinate(1, 0), Rational(3)},
                                               {Variable::coordinate(1, 1), Rational(2)},
                                               {Variable::coordinate(3, 0), Rational(4)},
                                               {Variable::coordinate(3, 1), Rational(2)}};
    const VerifyOutcome good = verifyPoint(det, concurrent, buildFramework(det, concurrent));

    std::map<Variable, Rational> perturbed = concurrent;
    perturbed[Variable::coordinate(1, 0)] = Rational(3) + Rational(1, 100);
    const VerifyOutcome bad = verifyPoint(det, perturbed, buildFramework(det, perturbed));

    const bool pass = equationOk && good.ok && !bad.ok;
    json report;
    report["demo"] = "perspective";
    report["characterization"] = toJson(det);
    report["concurrency_equation"] =
        det.equations.empty() ? "" : det.equations.front().monicCanonical().str();
    report["verify_concurrent_ok"] = good.ok;
    if (good.witness) report["verify_concurrent_witness"] = stressJson(*good.witness, approx);
    report["verify_perturbed_ok"] = bad.ok;
    report["verify_perturbed_reason"] = bad.reason;
    report["all_checks_passed"] = pass;
    out << report.dump(2) << "\n";
    return pass ? 0 : 1;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tenseg: tensegrity form-finding in exact rational arithmetic"};
    app.require_subcommand(1);
    bool approx = false;
    app.add_flag("--approx", approx,
                 "add non-authoritative decimal renderings next to exact rationals");

    std::string graphPath, frameworkPath, stressPath, basePath, resultPath, pointPath;
    std::string method = "det", demoName;
    int dim = 0, firstVertex = 0;
    bool saturate = false;

    CLI::App* cDecompose = app.add_subcommand("decompose", "run the combinatorial decomposition");
    cDecompose->add_option("--graph", graphPath, "graph JSON file")->required();
    CLI::Option* dDim = cDecompose->add_option("--dim", dim, "ambient dimension (default: the graph's d)");
    CLI::Option* dFirst = cDecompose->add_option("--first-vertex", firstVertex, "vertex to process first");

    CLI::App* cCheck = app.add_subcommand("check", "test the necessary condition (exit 1 when it fails)");
    cCheck->add_option("--graph", graphPath, "graph JSON file")->required();
    CLI::Option* kDim = cCheck->add_option("--dim", dim, "ambient dimension");
    CLI::Option* kFirst = cCheck->add_option("--first-vertex", firstVertex, "vertex to process first");

    CLI::App* cStress = app.add_subcommand("stress", "emit a basis of the self-stress space");
    cStress->add_option("--framework", frameworkPath, "framework JSON file")->required();

    CLI::App* cClassify = app.add_subcommand("classify", "partition edges into cables/struts/removed");
    cClassify->add_option("--framework", frameworkPath, "framework JSON file")->required();
    CLI::Option* clStress = cClassify->add_option("--stress", stressPath,
                                                  "stress JSON file (default: the basis stress when "
                                                  "the space is one-dimensional)");

    CLI::App* cAtomize = app.add_subcommand("atomize", "decompose a self-stress into scaled atoms");
    cAtomize->add_option("--framework", frameworkPath, "framework JSON file")->required();
    cAtomize->add_option("--stress", stressPath, "stress JSON file")->required();

    CLI::App* cCharacterize =
        app.add_subcommand("characterize", "equations and negated equations for the placements");
    cCharacterize->add_option("--graph", graphPath, "graph JSON file")->required();
    CLI::Option* chDim = cCharacterize->add_option("--dim", dim, "ambient dimension");
    CLI::Option* chFirst = cCharacterize->add_option("--first-vertex", firstVertex, "vertex to process first");
    cCharacterize->add_option("--base", basePath, "base placement JSON (vertex -> point)");
    cCharacterize->add_option("--method", method, "det | elim")
        ->check(CLI::IsMember({"det", "elim"}));
    cCharacterize->add_flag("--saturate", saturate, "saturate nonzero constraints (elim only, tiny systems)");

    CLI::App* cVerify = app.add_subcommand("verify", "verify a candidate placement (exit 1 when it fails)");
    cVerify->add_option("--result", resultPath, "characterization result JSON")->required();
    cVerify->add_option("--point", pointPath, "assignment JSON (variable -> rational)")->required();

    CLI::App* cDemo = app.add_subcommand("demo", "run a bundled example end to end");
    cDemo->add_option("name", demoName, "octahedron | perspective")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*cDecompose || *cCheck) {
            const bool checking = cCheck->parsed();
            auto [g, fileDim] = graphFromJson(readJsonFile(graphPath));
            const int d = resolveDim(checking ? kDim : dDim, dim, fileDim);
            const SelectionPolicy policy = policyFromFlags(checking ? kFirst : dFirst, firstVertex);
            const DecompositionTrace trace = combinatorialDecompose(g, d, policy);
            const NecessityVerdict verdict = necessaryCondition(trace);
            json j;
            j["trace"] = toJson(trace);
            j["necessary_condition"] = toJson(verdict);
            j["edge_inserting"] = isEdgeInserting(trace);
            out << j.dump(2) << "\n";
            return (checking && !verdict.holds) ? 1 : 0;
        }
        if (*cStress) {
            const Framework f = frameworkFromJson(readJsonFile(frameworkPath));
            json j;
            j["basis"] = json::array();
            for (const Stress& w : selfStressBasis(f)) j["basis"].push_back(stressJson(w, approx));
            out << j.dump(2) << "\n";
            return 0;
        }
        if (*cClassify) {
            const Framework f = frameworkFromJson(readJsonFile(frameworkPath));
            Stress w;
            if (clStress->count() > 0) {
                w = stressFromJson(readJsonFile(stressPath));
            } else {
                const auto basis = selfStressBasis(f);
                if (basis.size() != 1)
                    throw Error("classify: self-stress space is " + std::to_string(basis.size()) +
                                "-dimensional, pass --stress to choose one");
                w = basis.front();
            }
            const Tensegrity t = classify(f, w);
            json j;
            auto edgeArray = [](const std::set<Edge>& s) {
                json arr = json::array();
                for (const Edge& e : s) arr.push_back(json::array({e.u, e.v}));
                return arr;
            };
            j["cables"] = edgeArray(t.cables);
            j["struts"] = edgeArray(t.struts);
            j["removed"] = edgeArray(t.removed);
            j["stress"] = stressJson(w, approx);
            out << j.dump(2) << "\n";
            return 0;
        }
        if (*cAtomize) {
            const Framework f = frameworkFromJson(readJsonFile(frameworkPath));
            const Stress w = stressFromJson(readJsonFile(stressPath));
            const AtomicDecomposition atoms = atomicDecompose(f, w);
            json j;
            j["atoms"] = json::array();
            for (const ScaledAtom& a : atoms) {
                json entry;
                entry["members"] = json::array();
                for (VertexId v : a.members) entry["members"].push_back(v);
                entry["scale"] = a.scale.str();
                if (approx) entry["scale_approx"] = a.scale.approx();
                j["atoms"].push_back(std::move(entry));
            }
            out << j.dump(2) << "\n";
            return 0;
        }
        if (*cCharacterize) {
            auto [g, fileDim] = graphFromJson(readJsonFile(graphPath));
            const int d = resolveDim(chDim, dim, fileDim);
            const SelectionPolicy policy = policyFromFlags(chFirst, firstVertex);
            const DecompositionTrace trace = combinatorialDecompose(g, d, policy);
            BasePlacement base;
            if (basePath.empty()) base = defaultBasePlacement(d, baseMembers(trace));
            else base.points = pointsFromJson(readJsonFile(basePath), d);
            CharacterizationResult result;
            if (method == "det") {
                result = reconstruct(trace, base);
            } else {
                ElimPathwayOptions opts;
                opts.saturateNonzero = saturate;
                result = characterizeViaElimination(trace, base, opts);
            }
            out << toJson(result).dump(2) << "\n";
            return 0;
        }
        if (*cVerify) {
            const CharacterizationResult result = resultFromJson(readJsonFile(resultPath));
            const auto assignment = assignmentFromJson(readJsonFile(pointPath));
            const Framework f = buildFramework(result, assignment);
            const VerifyOutcome outcome = verifyPoint(result, assignment, f);
            json j;
            j["verdict"] = outcome.ok;
            j["general_position"] = outcome.general_position;
            if (!outcome.ok) j["reason"] = outcome.reason;
            if (outcome.witness) j["witness"] = stressJson(*outcome.witness, approx);
            out << j.dump(2) << "\n";
            return outcome.ok ? 0 : 1;
        }
        if (*cDemo) {
            if (demoName == "octahedron") return demoOctahedron(out, approx);
            if (demoName == "perspective") return demoPerspective(out, approx);
            err << "error: unknown demo \"" << demoName << "\" (octahedron | perspective)\n";
            return 2;
        }
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

int runCli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return runCli(args, std::cout, std::cerr);
}

}  // namespace tenseg
