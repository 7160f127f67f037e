#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qrv/error.hpp"

namespace qrv {

struct Arrow {
    std::string id;
    int tail = -1;
    int head = -1;
};

// Finite quiver with ordered vertex and arrow lists.  Declaration order is
// semantically load-bearing: block layouts of the h/t matrices and the
// canonical variable order both follow it.
class Quiver {
  public:
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    // Derived, filled by finalize(): incident arrows per vertex in
    // declaration order.  Loops appear in both lists.
    std::vector<std::vector<int>> in_arrows;
    std::vector<std::vector<int>> out_arrows;

    void finalize();

    int num_vertices() const { return (int)vertices.size(); }
    int num_arrows() const { return (int)arrows.size(); }

    int vertex_index(const std::string& name) const;
    int arrow_index(const std::string& id) const;
    bool is_loop(int a) const { return arrows[a].tail == arrows[a].head; }
    int loop_count(int x) const;
};

// Monomial relations are stored as paths in traversal order: {a, b} is the
// path "a then b" and requires head(a) == tail(b).
struct Algebra {
    Quiver q;
    std::vector<std::vector<int>> relations;
    bool rad_square_zero = false;

    // True when the 2-path "a then b" lies in the relation ideal.
    bool two_path_in_ideal(int a, int b) const;

    // All length-2 relation paths, including the expansion of the
    // radical-square-zero flag; longer explicit relations appended.
    std::vector<std::vector<int>> effective_relations() const;

    // Semantic radical-square-zero test: every composable 2-path is a
    // relation (equivalently, every vertex is a node).
    bool is_rad_square_zero() const;
};

using DimVec = std::vector<int>;  // indexed like Quiver::vertices

// --- JSON interchange ------------------------------------------------------

// Strict parser for the documented quiver format; unknown keys are rejected.
Algebra parse_algebra(const nlohmann::json& doc);
Algebra parse_algebra_text(const std::string& text);
nlohmann::json algebra_to_json(const Algebra& A);

nlohmann::json dimvec_to_json(const Quiver& q, const DimVec& d);
DimVec dimvec_from_json(const Quiver& q, const nlohmann::json& j, bool allow_negative = false);

// "v1:n1,v2:n2,..." covering every vertex exactly once.
DimVec parse_vertex_map(const Quiver& q, const std::string& text, bool allow_negative = false);

// --- node splitting --------------------------------------------------------

bool is_node(const Algebra& A, int x);

struct SplitResult {
    Algebra algebra;  // A^x
    int x_t = -1;     // index of the new source in algebra.q
    int x_h = -1;     // index of the new sink
};

// Splits the node x into a source x_t (outgoing arrows) and a sink x_h
// (incoming arrows); relations through x are dropped, everything else kept.
SplitResult split_node(const Algebra& A, int x);

struct FullSplitResult {
    Algebra algebra;             // separated (bipartite, relation-free) quiver
    std::vector<int> tail_part;  // original vertex -> index of its source copy
    std::vector<int> head_part;  // original vertex -> index of its sink copy
};

FullSplitResult split_all_nodes(const Algebra& A);

// Dimension vector d^x_r on split_node(A, x): d(x)-r at x_t, r at x_h.
DimVec split_dimvec(const Algebra& A, int x, const DimVec& d, int r);

// Dimension vector on split_all_nodes(A) with rank r(x) at each sink copy and
// d(x)-r(x) at each source copy.
DimVec split_all_dimvec(const Algebra& A, const DimVec& d, const DimVec& r);

void validate_dimvec(const Quiver& q, const DimVec& d);
void validate_rank_range(const DimVec& d, const DimVec& r);

}  // namespace qrv
