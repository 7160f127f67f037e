#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qrv/quiver.hpp"

namespace qrv {

// Rank sequences live in the box 0 <= r <= d and index candidate strata C_r:
// the closure of the locus of points whose x-rank is r(x) at every vertex.
using RankSeq = DimVec;

// u_x(r) = sum over arrows into x of (d - r)(tail) minus r(x); nonnegativity
// at every vertex is equivalent to C_r being nonempty.
long long u_value(const Quiver& q, const DimVec& d, const RankSeq& r, int x);

// v_x(r) = sum over arrows out of x of r(head) minus (d - r)(x); at vertices
// where u exceeds the loop count, nonnegativity decides maximality.
long long v_value(const Quiver& q, const DimVec& d, const RankSeq& r, int x);

bool is_nonempty(const Quiver& q, const DimVec& d, const RankSeq& r);

// Irreducible-component test for radical-square-zero algebras: C_r nonempty
// and v_x(r) >= 0 at every vertex with u_x(r) > loop_count(x).
bool is_component(const Algebra& A, const DimVec& d, const RankSeq& r);

// dim C_r = sum_x r(x)(d-r)(x) + sum_arrows (d-r)(tail) * r(head).
long long component_dimension(const Quiver& q, const DimVec& d, const RankSeq& r);

struct ComponentRecord {
    RankSeq r;
    bool nonempty = false;
    long long dimension = 0;
    bool is_component = false;
    // For radical-square-zero algebras the components are known to be normal
    // with rational singularities; carried as metadata.
    bool normal = true;
    bool rational_singularities = true;
};

// All components of rep_A(d), lexicographic in r.
std::vector<ComponentRecord> enumerate_components(const Algebra& A, const DimVec& d);

nlohmann::json component_record_to_json(const Quiver& q, const ComponentRecord& rec);

// Proof-side special case: when u_x(r) > loop_count(x) and v_x(r) < 0, the
// stratum closure C_r lies inside the closure of C_{r + e_x}.  Used as a
// cheap certificate next to the sampling-based containment test.
bool contained_in_rank_increment(const Quiver& q, const DimVec& d, const RankSeq& r, int x);

// --- splitting correspondence bookkeeping ----------------------------------

// Label for the two sides of the splitting correspondence at a node x: a
// component description on the split side at d^x_r, and the saturated image
// (the GL(d(x))-sweep) on the ambient side with x-rank r.
struct SplitComponentLabel {
    std::string split_component_id;
    DimVec split_dim;      // on split_node(A, x).q
    int x_h_rank = 0;      // = split_dim at the sink copy
    std::string vertex;    // name of the split vertex in A
    std::string saturated_component_id;
    DimVec ambient_dim;    // on A.q
};

// Builds the label for the saturation GL(d(x)) . C of a split-side component
// C; claimed_rank must equal the sink-copy dimension r.
SplitComponentLabel saturate_component_label(const Algebra& A, int x, const DimVec& d, int r,
                                             const std::string& component_id, int claimed_rank);

// Inverse direction: the split-side description recovered by intersecting the
// saturated family with the split representation space.
struct SplitSideView {
    std::string component_id;
    DimVec split_dim;
    int x_h_rank = 0;
};

SplitSideView intersect_with_split_space(const SplitComponentLabel& label);

}  // namespace qrv
