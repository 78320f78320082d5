#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tenseg/decompose.hpp"
#include "tenseg/framework.hpp"
#include "tenseg/groebner.hpp"
#include "tenseg/rational_function.hpp"

namespace tenseg {

/// Concrete coordinates for the d+2 vertices of the last-extracted atom.
struct BasePlacement {
    std::map<VertexId, RatVector> points;
};

/// The paper's base choice for d=3 ((0,0,0),(1,1,1),(0,1,0),(1,0,0),(0,0,1))
/// and the unit square plus origin for d=2, mapped onto the base vertices in
/// ascending order. Other dimensions require an explicit placement.
BasePlacement defaultBasePlacement(int dim, const std::vector<VertexId>& baseMembers);

/// Edge -> tension as a rational function of the unknown coordinates.
using SymbolicStress = std::map<Edge, RationalFunction>;

/// Atom stress computed symbolically: lambda_i are signed cofactor
/// determinants of the homogeneous point matrix (polynomials in the
/// unknowns), and w_ij = lambda_i * lambda_j.
struct SymbolicAtom {
    std::vector<VertexId> members;  // ascending, matches lambda order
    std::vector<Polynomial> lambda;
    std::map<Edge, Polynomial> stress;
    std::vector<VertexId> newVertices;   // members placed by this call
    std::vector<Variable> newUnknowns;   // d fresh coordinates per new vertex

    SymbolicStress stressAsRationalFunctions() const;
};

/// Computes the symbolic atom stress over `members`. Members missing from
/// `placement` receive d fresh coordinate variables (at most two; fewer than
/// d placed members raises HangingStructureError). The placement map is
/// extended in place.
SymbolicAtom symbolicAtomStress(int dim, const std::vector<VertexId>& members,
                                std::map<VertexId, std::vector<Polynomial>>& placement);

/// Equations and negated equations on the unknown coordinates that
/// characterize the general-position placements admitting an
/// everywhere-nonzero self-stress.
struct CharacterizationResult {
    int dim = 0;
    Graph graph;
    std::map<VertexId, RatVector> base_points;
    std::vector<VertexId> free_vertices;                        // introduction order
    std::map<VertexId, std::vector<Variable>> unknown_coords;   // per free vertex
    std::vector<Variable> unknowns;
    std::vector<Polynomial> equations;        // must vanish
    std::vector<Polynomial> negated;          // must not vanish; one per graph edge, lex order
    std::vector<Polynomial> side_conditions;  // cleared denominators / general-position cofactors
    /// Set when an equation is a nonzero constant or a negated polynomial is
    /// identically zero: no general-position solutions exist.
    bool inconsistent = false;
};

/// Determinant pathway (reverse reconstruction with symbolic atom stresses).
/// Preconditions: the trace is edge-inserting, satisfies the necessary
/// condition, and the base covers exactly the last atom in general position.
CharacterizationResult reconstruct(const DecompositionTrace& trace, const BasePlacement& base);

struct ElimPathwayOptions {
    /// Adds auxiliary t variables and (tension * t - 1) equations per graph
    /// edge, saturating the nonvanishing constraints. Only viable for tiny
    /// systems.
    bool saturateNonzero = false;
    EliminationOptions elimination;
};

/// Elimination pathway: per re-added atom, an equilibrium system in fresh
/// tension variables with the cancellation values substituted, followed by
/// Groebner elimination of the tension variables. Negated polynomials and
/// side conditions are shared with the determinant pathway.
CharacterizationResult characterizeViaElimination(const DecompositionTrace& trace,
                                                  const BasePlacement& base,
                                                  const ElimPathwayOptions& options = {});

struct VerifyOutcome {
    bool ok = false;
    std::string reason;             // empty when ok
    std::optional<Stress> witness;  // everywhere-nonzero self-stress when ok
    /// Full general-position predicate of the completed framework. Reported
    /// separately: the side conditions cover the determinants the
    /// characterization actually divides by, and the kernel oracle decides
    /// the verdict.
    bool general_position = false;
};

/// Completes the framework from the base placement plus an assignment of the
/// unknown coordinates.
Framework buildFramework(const CharacterizationResult& result,
                         const std::map<Variable, Rational>& assignment);

/// Checks a candidate placement: all equations vanish, all negated and side
/// polynomials do not, and an independent kernel oracle finds a self-stress
/// with no zero tension on the graph edges. That witnessing stress is
/// returned. The full general-position predicate is evaluated and reported
/// but does not gate the verdict; the oracle is authoritative.
VerifyOutcome verifyPoint(const CharacterizationResult& result,
                          const std::map<Variable, Rational>& assignment,
                          const Framework& framework);

}  // namespace tenseg
