#include "tenseg/characterize.hpp"

#include <algorithm>

namespace tenseg {

namespace {

/// Laplace expansion determinant for small polynomial matrices.
Polynomial polyDeterminant(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(1);
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Polynomial det;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].isZero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * polyDeterminant(minor);
        if (j % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

std::vector<const ExtractionStep*> extractionSteps(const DecompositionTrace& trace) {
    std::vector<const ExtractionStep*> out;
    for (const TraceStep& s : trace.steps)
        if (const auto* ex = std::get_if<ExtractionStep>(&s)) out.push_back(ex);
    return out;
}

/// Accumulated state of the reverse reconstruction, shared by both
/// characterization pathways.
struct Reconstruction {
    CharacterizationResult result;
    std::map<VertexId, std::vector<Polynomial>> placement;
    std::map<Edge, RationalFunction> running;          // tensions as rational functions
    std::vector<SymbolicAtom> symbolicAtoms;           // reverse (reconstruction) order
    std::vector<const ExtractionStep*> symbolicSteps;  // aligned with symbolicAtoms
    Stress baseStress;

    void addSideCondition(const Polynomial& p) {
        if (p.isConstant()) return;
        const Polynomial monic = p.monicCanonical();
        for (const auto& existing : result.side_conditions)
            if (existing == monic) return;
        result.side_conditions.push_back(monic);
    }
};

void checkPreconditions(const DecompositionTrace& trace, const BasePlacement& base,
                        const std::vector<const ExtractionStep*>& extractions) {
    replay(trace);
    if (extractions.empty())
        throw Error("characterize: trace extracts no atoms, nothing to reconstruct");
    if (!isEdgeInserting(trace))
        throw NotEdgeInsertingError(
            "characterize: trace is not edge-inserting; reconstruction with free atom scales is not "
            "supported");
    const NecessityVerdict verdict = necessaryCondition(trace);
    if (!verdict.holds)
        throw Error("characterize: necessary condition fails, witness edge " +
                    verdict.witness->str());

    const Atom& baseAtom = extractions.back()->atom;
    if (base.points.size() != baseAtom.members.size())
        throw Error("characterize: base placement must cover exactly the last atom's vertices");
    std::vector<RatVector> pts;
    for (VertexId v : baseAtom.members) {
        auto it = base.points.find(v);
        if (it == base.points.end())
            throw Error("characterize: base placement missing vertex " + std::to_string(v));
        if (it->second.size() != trace.dim)
            throw Error("characterize: base point for vertex " + std::to_string(v) +
                        " has wrong dimension");
        pts.push_back(it->second);
    }
    if (!inGeneralPosition(trace.dim, pts))
        throw DegenerateConfigurationError("characterize: base placement is not in general position");
}

/// Runs the reverse reconstruction and fills running tensions, equations,
/// negated polynomials and side conditions.
Reconstruction runReconstruction(const DecompositionTrace& trace, const BasePlacement& base) {
    const auto extractions = extractionSteps(trace);
    checkPreconditions(trace, base, extractions);

    Reconstruction rec;
    rec.result.dim = trace.dim;
    rec.result.graph = trace.input_graph;
    rec.result.base_points = base.points;

    for (const auto& [v, p] : base.points) {
        std::vector<Polynomial> coords;
        for (int c = 0; c < trace.dim; ++c) coords.push_back(Polynomial::constant(p(c)));
        rec.placement[v] = std::move(coords);
    }

    // Base atom: concrete stress, normalization scale 1.
    rec.baseStress = atomStress(trace.dim, base.points);
    for (const auto& [e, t] : rec.baseStress.tensions()) rec.running[e] = RationalFunction(t);

    // Inserted edges of the base atom have constant nonzero tension and no
    // scale left to cancel them: unsatisfiable equations.
    for (const Edge& e : extractions.back()->inserted_edges) {
        rec.result.equations.push_back(rec.running.at(e).num());
        rec.result.inconsistent = true;
    }

    for (std::size_t k = extractions.size() - 1; k-- > 0;) {
        const ExtractionStep& ex = *extractions[k];
        const std::vector<VertexId> members = ex.atom.membersAscending();
        SymbolicAtom atom = symbolicAtomStress(trace.dim, members, rec.placement);

        for (VertexId v : atom.newVertices) {
            rec.result.free_vertices.push_back(v);
            rec.result.unknown_coords[v] = {};
        }
        for (const Variable& u : atom.newUnknowns) {
            rec.result.unknowns.push_back(u);
            rec.result.unknown_coords[u.a].push_back(u);
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (atom.lambda[i].isZero())
                throw DegenerateConfigurationError(
                    "characterize: placed points of atom around vertex " +
                    std::to_string(ex.atom.apex) + " are in special position");
            rec.addSideCondition(atom.lambda[i]);
        }

        // Scale that cancels the running tension at the designated
        // (lexicographically smallest) inserted edge.
        const Edge designated = *ex.inserted_edges.begin();
        const Polynomial& lamU = atom.lambda[static_cast<std::size_t>(
            std::find(members.begin(), members.end(), designated.u) - members.begin())];
        const Polynomial& lamV = atom.lambda[static_cast<std::size_t>(
            std::find(members.begin(), members.end(), designated.v) - members.begin())];
        auto runningAt = [&](const Edge& e) {
            auto it = rec.running.find(e);
            return it == rec.running.end() ? RationalFunction() : it->second;
        };
        const RationalFunction sigma = (-runningAt(designated)).overPoly(lamU).overPoly(lamV);

        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const Edge e(members[i], members[j]);
                const RationalFunction add = sigma.timesPoly(atom.lambda[i]).timesPoly(atom.lambda[j]);
                rec.running[e] = runningAt(e) + add;
            }
        if (!rec.running.at(designated).isZero())
            throw Error("characterize: internal error, designated edge tension did not cancel");

        for (const Edge& e : ex.inserted_edges) {
            if (e == designated) continue;
            const RationalFunction& rf = rec.running.at(e);
            for (const auto& [f, mult] : rf.denFactors()) rec.addSideCondition(f);
            if (rf.isZero()) continue;  // vacuous condition
            rec.result.equations.push_back(rf.num());
            if (rf.num().isConstant()) rec.result.inconsistent = true;
        }

        rec.symbolicAtoms.push_back(std::move(atom));
        rec.symbolicSteps.push_back(&ex);
    }

    for (const Edge& e : trace.input_graph.edges()) {
        auto it = rec.running.find(e);
        if (it == rec.running.end() || it->second.isZero()) {
            rec.result.negated.push_back(Polynomial::zero());
            rec.result.inconsistent = true;
            continue;
        }
        for (const auto& [f, mult] : it->second.denFactors()) rec.addSideCondition(f);
        rec.result.negated.push_back(it->second.num());
    }
    return rec;
}

}  // namespace

BasePlacement defaultBasePlacement(int dim, const std::vector<VertexId>& baseMembers) {
    std::vector<std::vector<long>> coords;
    if (dim == 2) coords = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    else if (dim == 3) coords = {{0, 0, 0}, {1, 1, 1}, {0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    else
        throw UnsupportedDimensionError(
            "defaultBasePlacement: built-in placements exist only for d = 2 and 3");
    if (baseMembers.size() != coords.size())
        throw Error("defaultBasePlacement: expected " + std::to_string(coords.size()) + " vertices");
    std::vector<VertexId> sorted = baseMembers;
    std::sort(sorted.begin(), sorted.end());
    BasePlacement base;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        RatVector p(dim);
        for (int c = 0; c < dim; ++c) p(c) = Rational(coords[i][static_cast<std::size_t>(c)]);
        base.points[sorted[i]] = p;
    }
    return base;
}

SymbolicStress SymbolicAtom::stressAsRationalFunctions() const {
    SymbolicStress out;
    for (const auto& [e, p] : stress) out.emplace(e, RationalFunction(p));
    return out;
}

SymbolicAtom symbolicAtomStress(int dim, const std::vector<VertexId>& members,
                                std::map<VertexId, std::vector<Polynomial>>& placement) {
    if (members.size() != static_cast<std::size_t>(dim) + 2)
        throw Error("symbolicAtomStress: expected d+2 members");
    SymbolicAtom atom;
    atom.members = members;
    std::sort(atom.members.begin(), atom.members.end());

    int placed = 0;
    for (VertexId v : atom.members)
        if (placement.count(v)) ++placed;
    if (placed < dim)
        throw HangingStructureError("symbolicAtomStress: atom shares only " + std::to_string(placed) +
                                    " placed vertices, need at least " + std::to_string(dim));

    for (VertexId v : atom.members) {
        if (placement.count(v)) continue;
        std::vector<Polynomial> coords;
        for (int c = 0; c < dim; ++c) {
            const Variable var = Variable::coordinate(v, c);
            coords.push_back(Polynomial::variable(var));
            atom.newUnknowns.push_back(var);
        }
        placement[v] = std::move(coords);
        atom.newVertices.push_back(v);
    }

    // homogeneous matrix: rows [1; coordinates], one column per member
    const std::size_t n = atom.members.size();
    std::vector<std::vector<Polynomial>> homog(static_cast<std::size_t>(dim) + 1,
                                               std::vector<Polynomial>(n));
    for (std::size_t c = 0; c < n; ++c) {
        homog[0][c] = Polynomial::constant(1);
        const auto& coords = placement.at(atom.members[c]);
        for (int r = 0; r < dim; ++r) homog[static_cast<std::size_t>(r) + 1][c] = coords[r];
    }

    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<Polynomial>> minor(homog.size());
        for (std::size_t r = 0; r < homog.size(); ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (c != i) minor[r].push_back(homog[r][c]);
        Polynomial lam = polyDeterminant(minor);
        if (i % 2 == 1) lam = -lam;
        atom.lambda.push_back(std::move(lam));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            atom.stress.emplace(Edge(atom.members[i], atom.members[j]),
                                atom.lambda[i] * atom.lambda[j]);
    return atom;
}

CharacterizationResult reconstruct(const DecompositionTrace& trace, const BasePlacement& base) {
    return runReconstruction(trace, base).result;
}

CharacterizationResult characterizeViaElimination(const DecompositionTrace& trace,
                                                  const BasePlacement& base,
                                                  const ElimPathwayOptions& options) {
    // Negated polynomials, side conditions and unknown bookkeeping are
    // shared with the determinant pathway; only the equations are replaced
    // by the elimination output.
    Reconstruction rec = runReconstruction(trace, base);

    const bool tagAtoms = rec.symbolicAtoms.size() > 1;
    std::map<Edge, Polynomial> totals;  // tension totals per edge, tension variables substituted
    for (const auto& [e, t] : rec.baseStress.tensions()) totals[e] = Polynomial::constant(t);

    std::vector<Polynomial> system;
    std::set<Variable> dropVars;

    for (std::size_t k = 0; k < rec.symbolicAtoms.size(); ++k) {
        const SymbolicAtom& atom = rec.symbolicAtoms[k];
        const ExtractionStep& ex = *rec.symbolicSteps[k];
        const int ordinal = tagAtoms ? static_cast<int>(k) : -1;

        // Cancellation first: the tension of each inserted edge is pinned to
        // the value that cancels the running total, so its variable never
        // enters the system.
        std::map<Edge, Polynomial> contribution;  // this atom's tension per edge
        for (std::size_t i = 0; i < atom.members.size(); ++i)
            for (std::size_t j = i + 1; j < atom.members.size(); ++j) {
                const Edge e(atom.members[i], atom.members[j]);
                contribution[e] = Polynomial::variable(Variable::tension(e, ordinal));
            }
        for (const Edge& e : ex.inserted_edges) {
            auto it = totals.find(e);
            contribution[e] = it == totals.end() ? Polynomial::zero() : -it->second;
        }

        // Equilibrium rows R^t w^t = 0 of this atom, one per member per
        // coordinate, with pinned tensions substituted.
        for (VertexId v : atom.members) {
            const auto& pv = rec.placement.at(v);
            for (int c = 0; c < trace.dim; ++c) {
                Polynomial row;
                for (VertexId u : atom.members) {
                    if (u == v) continue;
                    const Edge e(v, u);
                    row += contribution.at(e) * (pv[static_cast<std::size_t>(c)] -
                                                 rec.placement.at(u)[static_cast<std::size_t>(c)]);
                }
                if (!row.isZero()) system.push_back(row);
            }
        }

        for (auto& [e, p] : contribution) {
            auto it = totals.find(e);
            if (it == totals.end()) totals[e] = p;
            else it->second += p;
            for (const Variable& v : p.variables())
                if (v.kind == Variable::Kind::Tension) dropVars.insert(v);
        }
    }

    if (options.saturateNonzero) {
        for (const Edge& e : trace.input_graph.edges()) {
            auto it = totals.find(e);
            if (it == totals.end()) continue;
            const Variable aux = Variable::auxiliary(e);
            system.push_back(it->second * Polynomial::variable(aux) - Polynomial::constant(1));
            dropVars.insert(aux);
        }
    }

    rec.result.equations = eliminate(system, dropVars, options.elimination);
    rec.result.inconsistent = false;
    for (const auto& eq : rec.result.equations)
        if (!eq.isZero() && eq.isConstant()) rec.result.inconsistent = true;
    for (const auto& neg : rec.result.negated)
        if (neg.isZero()) rec.result.inconsistent = true;
    return rec.result;
}

Framework buildFramework(const CharacterizationResult& result,
                         const std::map<Variable, Rational>& assignment) {
    Framework f;
    f.dim = result.dim;
    f.graph = result.graph;
    f.points = result.base_points;
    for (const auto& [v, vars] : result.unknown_coords) {
        RatVector p(result.dim);
        for (int c = 0; c < result.dim; ++c) {
            auto it = assignment.find(vars[static_cast<std::size_t>(c)]);
            if (it == assignment.end())
                throw Error("buildFramework: missing value for " +
                            vars[static_cast<std::size_t>(c)].name());
            p(c) = it->second;
        }
        f.points[v] = p;
    }
    f.validate();
    return f;
}

VerifyOutcome verifyPoint(const CharacterizationResult& result,
                          const std::map<Variable, Rational>& assignment,
                          const Framework& framework) {
    for (const Variable& v : result.unknowns)
        if (!assignment.count(v))
            throw Error("verifyPoint: assignment missing unknown " + v.name());

    std::vector<std::string> failures;
    for (const auto& eq : result.equations)
        if (!eq.evaluate(assignment).isZero()) {
            failures.push_back("equation " + eq.str() + " evaluates to " +
                               eq.evaluate(assignment).str());
            break;
        }
    for (const auto& neg : result.negated)
        if (neg.evaluate(assignment).isZero()) {
            failures.push_back("negated polynomial " + neg.str() + " vanishes");
            break;
        }
    for (const auto& side : result.side_conditions)
        if (side.evaluate(assignment).isZero()) {
            failures.push_back("side condition " + side.str() + " vanishes");
            break;
        }
    const bool generalPosition = inGeneralPosition(framework);

    // Independent oracle: the self-stress space must contain a vector with
    // no zero tension. Build one greedily from the kernel basis.
    std::optional<Stress> witness;
    const std::vector<Stress> basis = selfStressBasis(framework);
    if (basis.empty()) {
        failures.push_back("self-stress space is trivial");
    } else {
        Stress acc = basis.front();
        for (std::size_t k = 1; k < basis.size(); ++k) {
            const Stress& b = basis[k];
            // pick t so that acc + t*b has no new zero where either entry is nonzero
            Rational t(1);
            for (long candidate = 1;; ++candidate) {
                t = Rational(candidate);
                bool good = true;
                for (const Edge& e : framework.graph.edges()) {
                    const Rational be = b.get(e);
                    if (!be.isZero() && (acc.get(e) + t * be).isZero()) { good = false; break; }
                }
                if (good) break;
            }
            Stress next;
            for (const Edge& e : framework.graph.edges()) next.set(e, acc.get(e) + t * b.get(e));
            acc = std::move(next);
        }
        bool allNonzero = true;
        for (const Edge& e : framework.graph.edges())
            if (acc.get(e).isZero()) { allNonzero = false; break; }
        if (!allNonzero) {
            failures.push_back("no self-stress is nonzero on every edge");
        } else {
            // normalize first nonzero tension to 1, matching the basis convention
            const Rational inv = Rational(1) / acc.tensions().begin()->second;
            witness = inv * acc;
        }
    }

    VerifyOutcome out;
    out.general_position = generalPosition;
    out.ok = failures.empty();
    if (!out.ok) {
        std::string reason;
        for (const auto& f : failures) {
            if (!reason.empty()) reason += "; ";
            reason += f;
        }
        out.reason = reason;
    } else {
        out.witness = std::move(witness);
    }
    return out;
}

}  // namespace tenseg
