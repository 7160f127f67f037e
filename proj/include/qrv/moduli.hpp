#pragma once

#include <vector>

#include "qrv/quiver.hpp"
#include "qrv/representation.hpp"

namespace qrv {

// Integral weight on the vertex set, same indexing as DimVec.
using Weight = std::vector<int>;

void validate_weight(const Quiver& q, const Weight& theta);

// Weight-driven reduction of the presentation.  At every vertex with nonzero
// weight the deletion rules of the stability analysis apply (and the vertex
// must be a node): theta(x) > 0 removes the arrows into x, theta(x) < 0
// removes the arrows out of x.  Vertices with theta(x) = 0 are deleted
// outright (with their incident arrows) when the algebra is radical square
// zero; for other presentations a zero-weight node keeps its vertex and loses
// its incident arrows, and a zero-weight non-node is left untouched.
struct ReducedAlgebra {
    Algebra algebra;
    std::vector<int> kept_vertices;  // reduced index -> original index
    std::vector<int> kept_arrows;    // reduced index -> original index
    std::vector<bool> vertex_deleted;
    std::vector<bool> arrow_deleted;
};

ReducedAlgebra reduce_by_weight(const Algebra& A, const Weight& theta);

// Pushes a representation of A to the reduced presentation: deleted arrows
// are dropped, deleted vertices lose their summand.
template <class F>
Rep<F> strip_representation(const F& f, const ReducedAlgebra& red, const Rep<F>& M) {
    Rep<F> out;
    for (int v : red.kept_vertices) out.dim.push_back(M.dim[v]);
    for (int a : red.kept_arrows) out.mats.push_back(M.mats[a]);
    validate_rep_shapes(red.algebra.q, out);
    (void)f;
    return out;
}

template <class F>
Weight strip_weight(const F&, const ReducedAlgebra& red, const Weight& theta) {
    Weight out;
    for (int v : red.kept_vertices) out.push_back(theta[v]);
    return out;
}

// Shape of a semistable representation at a node, per the sign of theta(x):
// negative weight forces h_x surjective and t_x zero (case_a), positive
// weight forces h_x zero and t_x injective (case_b), zero weight delegates to
// the map-stripped representation (case_c).  Reports violation when the
// caller-supplied point does not have the forced shape.
enum class NodeShape { case_a, case_b, case_c, violation };

const char* node_shape_name(NodeShape s);

template <class F>
NodeShape node_shape_check(const F& f, const Algebra& A, const Rep<F>& M, const Weight& theta,
                           int x) {
    validate_weight(A.q, theta);
    validate_rep_shapes(A.q, M);
    require(is_node(A, x), "vertex \"" + A.q.vertices[x] + "\" is not a node");
    if (theta[x] == 0) return NodeShape::case_c;
    Mat<F> h = h_matrix(f, A.q, M, x);
    Mat<F> t = t_matrix(f, A.q, M, x);
    if (theta[x] < 0) {
        if (mat_rank(f, h) == M.dim[x] && mat_is_zero(f, t)) return NodeShape::case_a;
        return NodeShape::violation;
    }
    if (mat_is_zero(f, h) && mat_rank(f, t) == M.dim[x]) return NodeShape::case_b;
    return NodeShape::violation;
}

}  // namespace qrv
