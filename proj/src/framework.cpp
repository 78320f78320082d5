#include "tenseg/framework.hpp"

#include <algorithm>

namespace tenseg {

const Rational& Stress::at(const Edge& e) const {
    auto it = tensions_.find(e);
    if (it == tensions_.end()) throw Error("Stress: no tension for edge " + e.str());
    return it->second;
}

Rational Stress::get(const Edge& e) const {
    auto it = tensions_.find(e);
    return it == tensions_.end() ? Rational(0) : it->second;
}

bool Stress::allZero() const {
    return std::all_of(tensions_.begin(), tensions_.end(),
                       [](const auto& kv) { return kv.second.isZero(); });
}

Stress Stress::operator-() const {
    Stress out = *this;
    for (auto& [e, t] : out.tensions_) t = -t;
    return out;
}

Stress operator*(const Rational& c, const Stress& w) {
    Stress out = w;
    for (auto& [e, t] : out.tensions_) t = c * t;
    return out;
}

void Framework::validate() const {
    for (VertexId v : graph.vertices()) {
        auto it = points.find(v);
        if (it == points.end())
            throw Error("Framework: vertex " + std::to_string(v) + " has no coordinates");
        if (it->second.size() != dim)
            throw Error("Framework: vertex " + std::to_string(v) + " has " +
                        std::to_string(it->second.size()) + " coordinates, expected " +
                        std::to_string(dim));
    }
}

namespace {

/// Homogeneous matrix with columns [1; p_i], (d+1) x (#points).
RatMatrix homogeneousMatrix(int dim, const std::vector<RatVector>& pts) {
    RatMatrix m(dim + 1, static_cast<Eigen::Index>(pts.size()));
    for (std::size_t c = 0; c < pts.size(); ++c) {
        m(0, static_cast<Eigen::Index>(c)) = Rational(1);
        for (int r = 0; r < dim; ++r) m(r + 1, static_cast<Eigen::Index>(c)) = pts[c](r);
    }
    return m;
}

std::vector<VertexId> sortedVertices(const Framework& f) {
    return {f.graph.vertices().begin(), f.graph.vertices().end()};
}

}  // namespace

bool inGeneralPosition(int dim, const std::vector<RatVector>& pts) {
    const std::size_t n = pts.size();
    const std::size_t k = static_cast<std::size_t>(dim) + 1;
    if (n < k) return true;
    // every (d+1)-subset affinely independent: homogeneous (d+1)x(d+1)
    // determinant nonzero
    std::vector<std::size_t> idx(k);
    std::vector<bool> select(n, false);
    std::fill(select.begin(), select.begin() + static_cast<long>(k), true);
    std::sort(select.begin(), select.end());  // enumerate combinations via permutations
    do {
        std::vector<RatVector> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (select[i]) sub.push_back(pts[i]);
        if (determinant(homogeneousMatrix(dim, sub)).isZero()) return false;
    } while (std::next_permutation(select.begin(), select.end()));
    return true;
}

bool inGeneralPosition(const Framework& f) {
    f.validate();
    std::vector<RatVector> pts;
    for (VertexId v : sortedVertices(f)) pts.push_back(f.points.at(v));
    return inGeneralPosition(f.dim, pts);
}

RatMatrix rigidityMatrix(const Framework& f) {
    f.validate();
    const std::vector<VertexId> order = sortedVertices(f);
    std::map<VertexId, Eigen::Index> block;
    for (std::size_t i = 0; i < order.size(); ++i)
        block[order[i]] = static_cast<Eigen::Index>(i) * f.dim;

    const auto& edges = f.graph.edges();
    RatMatrix r = RatMatrix::Constant(static_cast<Eigen::Index>(edges.size()),
                                      static_cast<Eigen::Index>(order.size()) * f.dim, Rational(0));
    Eigen::Index row = 0;
    for (const Edge& e : edges) {
        const RatVector& pi = f.points.at(e.u);
        const RatVector& pj = f.points.at(e.v);
        for (int c = 0; c < f.dim; ++c) {
            r(row, block[e.u] + c) = pi(c) - pj(c);
            r(row, block[e.v] + c) = pj(c) - pi(c);
        }
        ++row;
    }
    return r;
}

bool isEquilibrium(const Framework& f, const Stress& w) {
    f.validate();
    for (const Edge& e : f.graph.edges())
        if (!w.contains(e))
            throw Error("isEquilibrium: stress missing tension for edge " + e.str());
    if (w.size() != f.graph.edgeCount())
        throw Error("isEquilibrium: stress defined on edges outside the framework");

    const RatMatrix r = rigidityMatrix(f);
    RatRowVector wv(r.rows());
    Eigen::Index i = 0;
    for (const Edge& e : f.graph.edges()) wv(i++) = w.at(e);
    const RatRowVector prod = wv * r;
    for (Eigen::Index c = 0; c < prod.cols(); ++c)
        if (!prod(c).isZero()) return false;
    return true;
}

std::vector<Stress> selfStressBasis(const Framework& f) {
    const RatMatrix r = rigidityMatrix(f);
    std::vector<Stress> basis;
    for (const auto& row : leftNullspace(r)) {
        Stress w;
        Eigen::Index i = 0;
        for (const Edge& e : f.graph.edges()) w.set(e, row(i++));
        basis.push_back(std::move(w));
    }
    return basis;
}

RatVector affineDependence(int dim, const std::vector<RatVector>& pts) {
    if (pts.size() != static_cast<std::size_t>(dim) + 2)
        throw Error("affineDependence: expected d+2 points");
    const RatMatrix m = homogeneousMatrix(dim, pts);  // (d+1) x (d+2)
    const Eigen::Index n = m.cols();
    RatVector lambda(n);
    bool anyNonzero = false;
    for (Eigen::Index i = 0; i < n; ++i) {
        RatMatrix sub(m.rows(), n - 1);
        Eigen::Index c = 0;
        for (Eigen::Index j = 0; j < n; ++j)
            if (j != i) sub.col(c++) = m.col(j);
        Rational cof = determinant(sub);
        if (i % 2 == 1) cof = -cof;
        lambda(i) = cof;
        anyNonzero = anyNonzero || !cof.isZero();
    }
    if (!anyNonzero)
        throw DegenerateConfigurationError("affineDependence: all cofactors vanish");

    // normalize last nonzero entry (preferring the last) to 1
    Eigen::Index pivot = -1;
    for (Eigen::Index i = n - 1; i >= 0; --i)
        if (!lambda(i).isZero()) { pivot = i; break; }
    const Rational inv = Rational(1) / lambda(pivot);
    for (Eigen::Index i = 0; i < n; ++i) lambda(i) *= inv;
    return lambda;
}

Stress atomStress(int dim, const std::map<VertexId, RatVector>& pts) {
    std::vector<VertexId> ids;
    std::vector<RatVector> coords;
    for (const auto& [v, p] : pts) {
        ids.push_back(v);
        coords.push_back(p);
    }
    if (!inGeneralPosition(dim, coords))
        throw DegenerateConfigurationError("atomStress: points not in general position");
    const RatVector lambda = affineDependence(dim, coords);
    Stress w;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            w.set(Edge(ids[i], ids[j]),
                  lambda(static_cast<Eigen::Index>(i)) * lambda(static_cast<Eigen::Index>(j)));
    return w;
}

std::pair<Framework, Stress> addStresses(const Framework& f1, const Stress& w1,
                                         const Framework& f2, const Stress& w2) {
    if (f1.dim != f2.dim) throw Error("addStresses: dimension mismatch");
    f1.validate();
    f2.validate();
    Framework sum;
    sum.dim = f1.dim;
    sum.points = f1.points;
    for (const auto& [v, p] : f2.points) {
        auto it = sum.points.find(v);
        if (it == sum.points.end()) {
            sum.points[v] = p;
        } else if (it->second != p) {
            throw Error("addStresses: conflicting coordinates for shared vertex " + std::to_string(v));
        }
    }
    for (VertexId v : f1.graph.vertices()) sum.graph.addVertex(v);
    for (VertexId v : f2.graph.vertices()) sum.graph.addVertex(v);
    for (const Edge& e : f1.graph.edges()) sum.graph.addEdge(e);
    for (const Edge& e : f2.graph.edges())
        if (!sum.graph.hasEdge(e)) sum.graph.addEdge(e);

    Stress w;
    for (const Edge& e : sum.graph.edges()) w.set(e, w1.get(e) + w2.get(e));
    return {std::move(sum), std::move(w)};
}

Tensegrity classify(const Framework& f, const Stress& w) {
    if (!isEquilibrium(f, w))
        throw InconsistentStressError("classify: stress is not a self-stress of the framework");
    Tensegrity t;
    t.framework = f;
    for (const Edge& e : f.graph.edges()) {
        const int s = w.at(e).sgn();
        if (s > 0) t.cables.insert(e);
        else if (s < 0) t.struts.insert(e);
        else t.removed.insert(e);
    }
    return t;
}

AtomicDecomposition atomicDecompose(const Framework& f, const Stress& w) {
    f.validate();
    if (!inGeneralPosition(f))
        throw DegenerateConfigurationError("atomicDecompose: framework not in general position");
    if (!isEquilibrium(f, w))
        throw InconsistentStressError("atomicDecompose: input is not a self-stress");
    const int d = f.dim;

    // Working stress over arbitrary vertex pairs; atom additions create
    // tensions on non-graph pairs.
    std::map<Edge, Rational> cur;
    for (const auto& [e, t] : w.tensions())
        if (!t.isZero()) cur[e] = t;

    auto nonzeroNeighbors = [&](VertexId a) {
        std::vector<VertexId> out;
        for (const auto& [e, t] : cur)
            if (!t.isZero() && e.contains(a)) out.push_back(e.other(a));
        std::sort(out.begin(), out.end());
        return out;
    };

    AtomicDecomposition result;
    for (;;) {
        // smallest vertex that still has a nonzero incident tension
        VertexId a = 0;
        bool found = false;
        for (VertexId v : f.graph.vertices()) {
            if (!nonzeroNeighbors(v).empty()) {
                a = v;
                found = true;
                break;
            }
        }
        if (!found) break;

        std::vector<VertexId> nbrs = nonzeroNeighbors(a);
        while (!nbrs.empty()) {
            const int k = static_cast<int>(nbrs.size());
            if (k < d + 1)
                throw InconsistentStressError(
                    "atomicDecompose: vertex " + std::to_string(a) + " has " + std::to_string(k) +
                    " non-null incident tensions, impossible in general position");

            // Type 1 when k == d+1, Type 2 otherwise: cancel the smallest
            // apex edge with the atom on a and its d+1 smallest such
            // neighbors.
            std::vector<VertexId> chosen(nbrs.begin(), nbrs.begin() + (d + 1));
            std::map<VertexId, RatVector> pts;
            pts[a] = f.points.at(a);
            for (VertexId n : chosen) pts[n] = f.points.at(n);
            const Stress s = atomStress(d, pts);

            const Edge cancel(a, chosen.front());
            const Rational mu = -cur[cancel] / s.at(cancel);
            for (const auto& [e, t] : s.tensions()) {
                auto it = cur.find(e);
                if (it == cur.end()) cur[e] = mu * t;
                else it->second += mu * t;
            }
            if (!cur[cancel].isZero())
                throw InconsistentStressError("atomicDecompose: cancellation failed");

            ScaledAtom entry;
            entry.members.insert(a);
            entry.members.insert(chosen.begin(), chosen.end());
            entry.scale = -mu;
            result.push_back(std::move(entry));

            const std::vector<VertexId> after = nonzeroNeighbors(a);
            if (k == d + 1 && !after.empty())
                throw InconsistentStressError(
                    "atomicDecompose: Type 1 step left nonzero tensions at vertex " + std::to_string(a));
            nbrs = after;
        }
    }
    return result;
}

}  // namespace tenseg
