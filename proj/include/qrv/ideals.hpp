#pragma once

#include <string>
#include <vector>

#include "qrv/components.hpp"
#include "qrv/polynomial.hpp"
#include "qrv/quiver.hpp"
#include "qrv/representation.hpp"

namespace qrv {

struct SymbolicMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Poly> e;

    SymbolicMatrix() = default;
    SymbolicMatrix(int r, int c) : rows(r), cols(c), e((size_t)r * c) {}
    Poly& at(int i, int j) { return e[(size_t)i * cols + j]; }
    const Poly& at(int i, int j) const { return e[(size_t)i * cols + j]; }
};

// The generic matrix of an arrow: entry (i, j) is the variable (a, i, j).
SymbolicMatrix coordinate_matrix(const VarTable& vt, int arrow);

// Symbolic h/t matrices at a vertex: in-arrow blocks side by side, out-arrow
// blocks stacked, declaration order, loops in both.
SymbolicMatrix build_H(const Quiver& q, const DimVec& d, const VarTable& vt, int x);
SymbolicMatrix build_T(const Quiver& q, const DimVec& d, const VarTable& vt, int x);

SymbolicMatrix sym_mul(const SymbolicMatrix& a, const SymbolicMatrix& b);
Poly sym_trace(const SymbolicMatrix& m);

// All k x k minors, row/column subsets in lexicographic order.  Empty when k
// exceeds a dimension; k must be positive.
std::vector<Poly> minors(const SymbolicMatrix& m, int k);

enum class GenFamily { minor_H, minor_T, product_TH, trace_loop, saturated_P };

const char* family_name(GenFamily f);

struct TaggedPoly {
    Poly p;
    GenFamily family;
};

struct GeneratorSet {
    VarTable vt;
    std::vector<TaggedPoly> gens;
};

// Generators of the ideal of the rank stratum C_r inside the matrix space of
// (Q, d): per vertex x the (r(x)+1)-minors of H_x, the (d-r)(x)+1-minors of
// T_x, every entry of T_x * H_x, and the traces of loop matrices at x.
// Deduplicated (first family tag wins) and canonically ordered.
GeneratorSet generators_for_component(const Algebra& A, const DimVec& d, const RankSeq& r);

// Smallest linear subspace containing the given homogeneous polynomials and
// stable under the infinitesimal base-change action at vertex x; over the
// rationals this is the span of the GL(d(x))-translates.  Returns the unique
// reduced echelon basis.
std::vector<Poly> saturate_span(const std::vector<Poly>& polys, const Quiver& q, const DimVec& d,
                                const VarTable& vt, int x);

// Rewrites a polynomial on the split-side matrix space (split_node(A, x) at
// split_dimvec) into ambient coordinates via the embedding block layout.
Poly identify_split_polynomial(const Algebra& A, int x, const DimVec& d, int r,
                               const VarTable& split_vt, const VarTable& ambient_vt,
                               const Poly& p);

// Relative generator set at a node x: families (1)-(4) at x only, plus the
// GL(d(x))-saturation of a user-supplied homogeneous split-side family P.
GeneratorSet generators_relative(const Algebra& A, int x, const DimVec& d, int r,
                                 const std::vector<Poly>& split_P);

enum class ExportFormat { plain, macaulay2, singular };

ExportFormat parse_export_format(const std::string& s);
std::string export_generators(const GeneratorSet& gs, ExportFormat fmt);

// Point of the matrix space as a dense evaluation vector for vt.
template <class F>
std::vector<typename F::Elem> point_from_rep(const F&, const VarTable& vt, const Quiver& q,
                                             const Rep<F>& rep) {
    std::vector<typename F::Elem> pt;
    pt.reserve(vt.count());
    for (int a = 0; a < q.num_arrows(); ++a)
        for (int i = 0; i < rep.mats[a].rows; ++i)
            for (int j = 0; j < rep.mats[a].cols; ++j) pt.push_back(rep.mats[a].at(i, j));
    require((int)pt.size() == vt.count(), "representation does not match variable table");
    return pt;
}

}  // namespace qrv
