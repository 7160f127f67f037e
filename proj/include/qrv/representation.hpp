#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qrv/matrix.hpp"
#include "qrv/quiver.hpp"

namespace qrv {

// A point of the representation space: one d(head) x d(tail) matrix per
// arrow, in declaration order.
template <class F>
struct Rep {
    DimVec dim;
    std::vector<Mat<F>> mats;
};

template <class F>
Rep<F> zero_rep(const F& f, const Quiver& q, const DimVec& d) {
    validate_dimvec(q, d);
    Rep<F> rep;
    rep.dim = d;
    for (const auto& a : q.arrows) rep.mats.push_back(Mat<F>::zero(f, d[a.head], d[a.tail]));
    return rep;
}

template <class F>
void validate_rep_shapes(const Quiver& q, const Rep<F>& rep) {
    validate_dimvec(q, rep.dim);
    require((int)rep.mats.size() == q.num_arrows(), "representation arrow count mismatch");
    for (int a = 0; a < q.num_arrows(); ++a)
        require(rep.mats[a].rows == rep.dim[q.arrows[a].head] &&
                    rep.mats[a].cols == rep.dim[q.arrows[a].tail],
                "matrix shape mismatch at arrow \"" + q.arrows[a].id + "\"");
}

// Product of the matrices along a relation path (first arrow applied first).
template <class F>
Mat<F> path_product(const F& f, const Rep<F>& rep, const std::vector<int>& path) {
    Mat<F> acc = rep.mats[path[0]];
    for (size_t i = 1; i < path.size(); ++i) acc = mat_mul(f, rep.mats[path[i]], acc);
    return acc;
}

template <class F>
bool satisfies_relations(const F& f, const Algebra& A, const Rep<F>& rep) {
    validate_rep_shapes(A.q, rep);
    for (const auto& rel : A.effective_relations())
        if (!mat_is_zero(f, path_product(f, rep, rel))) return false;
    return true;
}

// Side-by-side concatenation of the matrices of arrows into x (loops
// included), declaration order: d(x) rows, sum of tail dims columns.
template <class F>
Mat<F> h_matrix(const F& f, const Quiver& q, const Rep<F>& rep, int x) {
    std::vector<const Mat<F>*> blocks;
    for (int a : q.in_arrows[x]) blocks.push_back(&rep.mats[a]);
    return mat_hconcat(f, rep.dim[x], blocks);
}

// Stack of the matrices of arrows out of x (loops included), declaration
// order: sum of head dims rows, d(x) columns.
template <class F>
Mat<F> t_matrix(const F& f, const Quiver& q, const Rep<F>& rep, int x) {
    std::vector<const Mat<F>*> blocks;
    for (int a : q.out_arrows[x]) blocks.push_back(&rep.mats[a]);
    return mat_vconcat(f, rep.dim[x], blocks);
}

template <class F>
int x_rank(const F& f, const Quiver& q, const Rep<F>& rep, int x) {
    return mat_rank(f, h_matrix(f, q, rep, x));
}

// Pushes a representation of the split algebra A^x (at dimension d^x_r) back
// into the representation space of A at d.  Arrows not touching x are copied;
// in-arrows gain d(x)-r zero rows below, out-arrows gain r zero columns in
// front, and a loop becomes the top-right r x (d(x)-r) block.
template <class F>
Rep<F> embed_representation(const F& f, const Algebra& A, int x, const DimVec& d, int r,
                            const Rep<F>& M) {
    validate_dimvec(A.q, d);
    DimVec expect = split_dimvec(A, x, d, r);
    require(M.dim == expect, "split representation has wrong dimension vector");
    SplitResult sr = split_node(A, x);
    validate_rep_shapes(sr.algebra.q, M);

    Rep<F> N;
    N.dim = d;
    int dx = d[x];
    for (int a = 0; a < A.q.num_arrows(); ++a) {
        bool at_head = A.q.arrows[a].head == x;
        bool at_tail = A.q.arrows[a].tail == x;
        const Mat<F>& B = M.mats[a];
        if (at_head && at_tail) {
            Mat<F> out = Mat<F>::zero(f, dx, dx);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < dx - r; ++j) out.at(i, r + j) = B.at(i, j);
            N.mats.push_back(std::move(out));
        } else if (at_head) {
            Mat<F> out = Mat<F>::zero(f, dx, B.cols);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < B.cols; ++j) out.at(i, j) = B.at(i, j);
            N.mats.push_back(std::move(out));
        } else if (at_tail) {
            Mat<F> out = Mat<F>::zero(f, B.rows, dx);
            for (int i = 0; i < B.rows; ++i)
                for (int j = 0; j < dx - r; ++j) out.at(i, r + j) = B.at(i, j);
            N.mats.push_back(std::move(out));
        } else {
            N.mats.push_back(B);
        }
    }
    return N;
}

// --- JSON interchange ------------------------------------------------------

namespace detail {

inline nlohmann::json entry_to_json(const Fp&, uint64_t v) { return nlohmann::json(v); }

inline nlohmann::json entry_to_json(const Rat&, const mpq_class& v) {
    if (v.get_den() == 1 && v.get_num().fits_slong_p()) return nlohmann::json(v.get_num().get_si());
    return nlohmann::json(v.get_str());
}

inline uint64_t entry_from_json(const Fp& f, const nlohmann::json& j) {
    if (j.is_number_integer()) return f.from_int(j.get<long long>());
    require(j.is_string(), "matrix entries must be integers or strings");
    mpq_class q(j.get<std::string>());
    q.canonicalize();
    return f.from_mpq(q);
}

inline mpq_class entry_from_json(const Rat&, const nlohmann::json& j) {
    if (j.is_number_integer()) return mpq_class((long)j.get<long long>());
    require(j.is_string(), "matrix entries must be integers or \"n/d\" strings");
    mpq_class q;
    try {
        q = mpq_class(j.get<std::string>());
    } catch (const std::invalid_argument&) {
        fail("bad rational literal \"" + j.get<std::string>() + "\"");
    }
    q.canonicalize();
    return q;
}

}  // namespace detail

template <class F>
nlohmann::json rep_to_json(const F& f, const Quiver& q, const Rep<F>& rep,
                           const FieldSpec& field) {
    nlohmann::json doc;
    doc["field"] = field.to_string();
    doc["dims"] = dimvec_to_json(q, rep.dim);
    nlohmann::json mats = nlohmann::json::object();
    for (int a = 0; a < q.num_arrows(); ++a) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < rep.mats[a].rows; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < rep.mats[a].cols; ++j)
                row.push_back(detail::entry_to_json(f, rep.mats[a].at(i, j)));
            rows.push_back(row);
        }
        mats[q.arrows[a].id] = rows;
    }
    doc["matrices"] = mats;
    return doc;
}

template <class F>
Rep<F> rep_from_json(const F& f, const Quiver& q, const nlohmann::json& doc) {
    require(doc.is_object() && doc.contains("dims") && doc.contains("matrices"),
            "representation document needs \"dims\" and \"matrices\"");
    Rep<F> rep;
    rep.dim = dimvec_from_json(q, doc["dims"]);
    const auto& mats = doc["matrices"];
    require(mats.is_object(), "\"matrices\" must be an object");
    for (auto it = mats.begin(); it != mats.end(); ++it) q.arrow_index(it.key());
    for (int a = 0; a < q.num_arrows(); ++a) {
        const std::string& id = q.arrows[a].id;
        require(mats.contains(id), "missing matrix for arrow \"" + id + "\"");
        int rows = rep.dim[q.arrows[a].head];
        int cols = rep.dim[q.arrows[a].tail];
        Mat<F> m = Mat<F>::zero(f, rows, cols);
        const auto& rowsj = mats[id];
        require(rowsj.is_array() && (int)rowsj.size() == rows,
                "matrix for arrow \"" + id + "\" has wrong row count");
        for (int i = 0; i < rows; ++i) {
            require(rowsj[i].is_array() && (int)rowsj[i].size() == cols,
                    "matrix for arrow \"" + id + "\" has wrong column count");
            for (int j = 0; j < cols; ++j) m.at(i, j) = detail::entry_from_json(f, rowsj[i][j]);
        }
        rep.mats.push_back(std::move(m));
    }
    validate_rep_shapes(q, rep);
    return rep;
}

}  // namespace qrv
