#pragma once

#include <map>
#include <set>
#include <vector>

#include "tenseg/graph.hpp"
#include "tenseg/linalg.hpp"

namespace tenseg {

/// Edge -> tension assignment. Tensions are symmetric by edge
/// canonicalization; iteration is in lexicographic edge order.
class Stress {
public:
    Stress() = default;
    explicit Stress(std::map<Edge, Rational> tensions) : tensions_(std::move(tensions)) {}

    const std::map<Edge, Rational>& tensions() const { return tensions_; }
    bool contains(const Edge& e) const { return tensions_.count(e) != 0; }

    const Rational& at(const Edge& e) const;
    /// Tension at e, or 0 when the edge carries no entry.
    Rational get(const Edge& e) const;
    void set(const Edge& e, Rational value) { tensions_[e] = std::move(value); }

    std::size_t size() const { return tensions_.size(); }
    bool allZero() const;

    Stress operator-() const;
    friend Stress operator*(const Rational& c, const Stress& w);

    bool operator==(const Stress&) const = default;

private:
    std::map<Edge, Rational> tensions_;
};

/// Embedding of a graph on exact rational points in R^d.
struct Framework {
    int dim = 0;
    std::map<VertexId, RatVector> points;
    Graph graph;

    /// Throws if some graph vertex has no coordinates or a point has the
    /// wrong number of entries.
    void validate() const;
};

/// Sign partition of the edges of a self-stressed framework: cables carry
/// positive tension, struts negative, zero-tension edges are removed.
struct Tensegrity {
    Framework framework;
    std::set<Edge> cables;
    std::set<Edge> struts;
    std::set<Edge> removed;
};

struct ScaledAtom {
    std::set<VertexId> members;
    Rational scale;
};

/// Sum decomposition of a self-stress into scaled atom stresses.
using AtomicDecomposition = std::vector<ScaledAtom>;

/// True iff no d+1 of the framework's points lie on a common hyperplane,
/// i.e. every (d+1)-subset is affinely independent.
bool inGeneralPosition(const Framework& f);
bool inGeneralPosition(int dim, const std::vector<RatVector>& pts);

/// e x (n d) rigidity matrix: one row per edge ij (i<j, lexicographic
/// order), the d-column block of vertex i holds p_i - p_j on that row, the
/// block of j holds p_j - p_i.
RatMatrix rigidityMatrix(const Framework& f);

/// True iff w . R(P) = 0 exactly. The stress must assign a tension to every
/// edge of the framework.
bool isEquilibrium(const Framework& f, const Stress& w);

/// Basis of the self-stress space, via the left kernel of the rigidity
/// matrix. Basis vectors are normalized so the first nonzero tension is 1.
std::vector<Stress> selfStressBasis(const Framework& f);

/// Affine dependence of d+2 points: nonzero lambda with sum lambda_i p_i = 0
/// and sum lambda_i = 0, computed from signed cofactors of the homogeneous
/// point matrix. Normalized so the last entry is 1 (falling back to the
/// largest-index nonzero entry). Throws DegenerateConfigurationError when
/// all cofactors vanish.
RatVector affineDependence(int dim, const std::vector<RatVector>& pts);

/// Atom self-stress w_ij = lambda_i lambda_j on the complete graph over the
/// given d+2 points, keyed by the supplied vertex identifiers (ascending
/// order matches the lambda order).
Stress atomStress(int dim, const std::map<VertexId, RatVector>& pts);

/// Sum of two self-stressed frameworks: union of vertices and edges,
/// tensions added on common edges. Throws when a shared vertex has
/// conflicting coordinates or the dimensions differ.
std::pair<Framework, Stress> addStresses(const Framework& f1, const Stress& w1,
                                         const Framework& f2, const Stress& w2);

/// Sign-partitions the edges of an exact self-stress. Throws
/// InconsistentStressError when (f, w) is not in equilibrium.
Tensegrity classify(const Framework& f, const Stress& w);

/// Decomposes a self-stress into a finite sum of scaled atom stresses
/// (Type 1 / Type 2 vertex elimination). The returned scaled atoms sum
/// exactly to w. Requires general position and equilibrium.
AtomicDecomposition atomicDecompose(const Framework& f, const Stress& w);

}  // namespace tenseg
