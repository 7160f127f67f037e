#include "qrv/moduli.hpp"

namespace qrv {

void validate_weight(const Quiver& q, const Weight& theta) {
    require((int)theta.size() == q.num_vertices(), "weight domain mismatch");
}

const char* node_shape_name(NodeShape s) {
    switch (s) {
        case NodeShape::case_a: return "case_a";
        case NodeShape::case_b: return "case_b";
        case NodeShape::case_c: return "case_c";
        case NodeShape::violation: return "violation";
    }
    return "?";
}

ReducedAlgebra reduce_by_weight(const Algebra& A, const Weight& theta) {
    validate_weight(A.q, theta);
    bool rad2 = A.is_rad_square_zero();

    ReducedAlgebra red;
    red.vertex_deleted.assign(A.q.num_vertices(), false);
    red.arrow_deleted.assign(A.q.num_arrows(), false);

    for (int x = 0; x < A.q.num_vertices(); ++x) {
        if (theta[x] == 0) {
            if (rad2) {
                red.vertex_deleted[x] = true;
                for (int a : A.q.in_arrows[x]) red.arrow_deleted[a] = true;
                for (int a : A.q.out_arrows[x]) red.arrow_deleted[a] = true;
            } else if (is_node(A, x)) {
                // map-stripping: incident maps become zero, vertex stays
                for (int a : A.q.in_arrows[x]) red.arrow_deleted[a] = true;
                for (int a : A.q.out_arrows[x]) red.arrow_deleted[a] = true;
            }
            continue;
        }
        require(is_node(A, x), "deletion rule invoked at non-node vertex \"" + A.q.vertices[x] +
                                   "\"");
        if (theta[x] > 0) {
            for (int a : A.q.in_arrows[x]) red.arrow_deleted[a] = true;
        } else {
            for (int a : A.q.out_arrows[x]) red.arrow_deleted[a] = true;
        }
    }

    std::vector<int> vmap(A.q.num_vertices(), -1);
    for (int v = 0; v < A.q.num_vertices(); ++v) {
        if (red.vertex_deleted[v]) continue;
        vmap[v] = red.algebra.q.num_vertices();
        red.kept_vertices.push_back(v);
        red.algebra.q.vertices.push_back(A.q.vertices[v]);
    }
    std::vector<int> amap(A.q.num_arrows(), -1);
    for (int a = 0; a < A.q.num_arrows(); ++a) {
        if (red.arrow_deleted[a]) continue;
        const Arrow& ar = A.q.arrows[a];
        amap[a] = red.algebra.q.num_arrows();
        red.kept_arrows.push_back(a);
        red.algebra.q.arrows.push_back(Arrow{ar.id, vmap[ar.tail], vmap[ar.head]});
    }
    red.algebra.q.finalize();

    // Relations survive when every arrow in the path survives.
    for (const auto& rel : A.relations) {
        bool alive = true;
        for (int a : rel) alive = alive && amap[a] >= 0;
        if (!alive) continue;
        std::vector<int> mapped;
        for (int a : rel) mapped.push_back(amap[a]);
        red.algebra.relations.push_back(std::move(mapped));
    }
    red.algebra.rad_square_zero = A.rad_square_zero;
    return red;
}

}  // namespace qrv
