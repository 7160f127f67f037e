#include "qrv/components.hpp"

namespace qrv {

long long u_value(const Quiver& q, const DimVec& d, const RankSeq& r, int x) {
    validate_dimvec(q, d);
    validate_rank_range(d, r);
    require(x >= 0 && x < q.num_vertices(), "vertex index out of range");
    long long u = -(long long)r[x];
    for (int a : q.in_arrows[x]) u += d[q.arrows[a].tail] - r[q.arrows[a].tail];
    return u;
}

long long v_value(const Quiver& q, const DimVec& d, const RankSeq& r, int x) {
    validate_dimvec(q, d);
    validate_rank_range(d, r);
    require(x >= 0 && x < q.num_vertices(), "vertex index out of range");
    long long v = -(long long)(d[x] - r[x]);
    for (int a : q.out_arrows[x]) v += r[q.arrows[a].head];
    return v;
}

bool is_nonempty(const Quiver& q, const DimVec& d, const RankSeq& r) {
    for (int x = 0; x < q.num_vertices(); ++x)
        if (u_value(q, d, r, x) < 0) return false;
    return true;
}

bool is_component(const Algebra& A, const DimVec& d, const RankSeq& r) {
    require(A.is_rad_square_zero(),
            "component classification requires a radical-square-zero algebra; "
            "use the relative splitting workflow instead");
    if (!is_nonempty(A.q, d, r)) return false;
    for (int x = 0; x < A.q.num_vertices(); ++x)
        if (u_value(A.q, d, r, x) > A.q.loop_count(x) && v_value(A.q, d, r, x) < 0) return false;
    return true;
}

long long component_dimension(const Quiver& q, const DimVec& d, const RankSeq& r) {
    validate_dimvec(q, d);
    validate_rank_range(d, r);
    long long dim = 0;
    for (int x = 0; x < q.num_vertices(); ++x) dim += (long long)r[x] * (d[x] - r[x]);
    for (const auto& a : q.arrows) dim += (long long)(d[a.tail] - r[a.tail]) * r[a.head];
    return dim;
}

std::vector<ComponentRecord> enumerate_components(const Algebra& A, const DimVec& d) {
    validate_dimvec(A.q, d);
    require(A.is_rad_square_zero(),
            "component enumeration requires a radical-square-zero algebra");
    std::vector<ComponentRecord> out;
    int n = A.q.num_vertices();
    RankSeq r(n, 0);
    while (true) {
        if (is_component(A, d, r)) {
            ComponentRecord rec;
            rec.r = r;
            rec.nonempty = true;
            rec.dimension = component_dimension(A.q, d, r);
            rec.is_component = true;
            out.push_back(rec);
        }
        // odometer, last vertex fastest: lexicographic output order
        int i = n - 1;
        while (i >= 0 && r[i] == d[i]) r[i--] = 0;
        if (i < 0) break;
        ++r[i];
    }
    return out;
}

nlohmann::json component_record_to_json(const Quiver& q, const ComponentRecord& rec) {
    nlohmann::json j;
    j["r"] = dimvec_to_json(q, rec.r);
    j["nonempty"] = rec.nonempty;
    j["dimension"] = rec.dimension;
    j["is_component"] = rec.is_component;
    j["normal"] = rec.normal;
    j["rational_singularities"] = rec.rational_singularities;
    return j;
}

bool contained_in_rank_increment(const Quiver& q, const DimVec& d, const RankSeq& r, int x) {
    return u_value(q, d, r, x) > q.loop_count(x) && v_value(q, d, r, x) < 0;
}

SplitComponentLabel saturate_component_label(const Algebra& A, int x, const DimVec& d, int r,
                                             const std::string& component_id, int claimed_rank) {
    validate_dimvec(A.q, d);
    require(x >= 0 && x < A.q.num_vertices(), "vertex index out of range");
    require(r >= 0 && r <= d[x], "rank outside [0, d(x)]");
    require(claimed_rank == r,
            "claimed sink-copy rank " + std::to_string(claimed_rank) +
                " does not match r = " + std::to_string(r));
    SplitComponentLabel label;
    label.split_component_id = component_id;
    label.split_dim = split_dimvec(A, x, d, r);
    label.x_h_rank = r;
    label.vertex = A.q.vertices[x];
    label.saturated_component_id = "GL." + A.q.vertices[x] + "." + component_id;
    label.ambient_dim = d;
    return label;
}

SplitSideView intersect_with_split_space(const SplitComponentLabel& label) {
    SplitSideView view;
    view.component_id = label.split_component_id;
    view.split_dim = label.split_dim;
    view.x_h_rank = label.x_h_rank;
    return view;
}

}  // namespace qrv
