#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrv/components.hpp"
#include "qrv/ideals.hpp"
#include "qrv/moduli.hpp"
#include "qrv/polynomial.hpp"
#include "qrv/quiver.hpp"
#include "qrv/representation.hpp"
#include "qrv/rng.hpp"

namespace qrv {

struct SampleConfig {
    uint64_t seed = 0;
    int trials = 100;
    uint64_t prime = 32003;
    int retry_budget = 64;
};

// --- sampling ----------------------------------------------------------------

template <class F>
typename F::Elem random_entry(const F& f, Rng& rng) {
    if constexpr (std::is_same_v<F, Rat>) {
        (void)f;
        return mpq_class((long)rng.int_in(-(1 << 20), 1 << 20));
    } else {
        return rng.below(f.modulus());
    }
}

template <class F>
Mat<F> random_matrix(const F& f, Rng& rng, int rows, int cols) {
    Mat<F> m = Mat<F>::zero(f, rows, cols);
    for (auto& e : m.a) e = random_entry(f, rng);
    return m;
}

template <class F>
Mat<F> random_invertible(const F& f, Rng& rng, int n, int retry_budget = 64) {
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        Mat<F> g = random_matrix(f, rng, n, n);
        if (!f.is_zero(mat_det(f, g))) return g;
    }
    fail("failed to draw an invertible matrix (field too small?)");
}

// Uniform point of the rank stratum C_r: a uniform representation of the
// fully separated quiver at the split dimension vector, pushed into the
// ambient space block-wise and hit with a random base change.  Draw order is
// fixed (split matrices in arrow order, then one invertible matrix per
// vertex), so a seed pins the point.
template <class F>
Rep<F> sample_component_point(const F& f, const Algebra& A, const DimVec& d, const RankSeq& r,
                              uint64_t seed, int retry_budget = 64) {
    validate_dimvec(A.q, d);
    validate_rank_range(d, r);
    require(A.is_rad_square_zero(), "sampling requires a radical-square-zero algebra");
    require(is_nonempty(A.q, d, r), "empty stratum: u-criterion fails");

    Rng rng(seed);
    Rep<F> N;
    N.dim = d;
    // split matrix of arrow a: r(head) x (d - r)(tail), placed top-right
    for (const auto& ar : A.q.arrows) {
        Mat<F> block = random_matrix(f, rng, r[ar.head], d[ar.tail] - r[ar.tail]);
        Mat<F> amb = Mat<F>::zero(f, d[ar.head], d[ar.tail]);
        for (int i = 0; i < block.rows; ++i)
            for (int j = 0; j < block.cols; ++j) amb.at(i, r[ar.tail] + j) = block.at(i, j);
        N.mats.push_back(std::move(amb));
    }
    std::vector<Mat<F>> g, ginv;
    for (int v = 0; v < A.q.num_vertices(); ++v) {
        Mat<F> gv = random_invertible(f, rng, d[v], retry_budget);
        auto inv = mat_inverse(f, gv);
        g.push_back(std::move(gv));
        ginv.push_back(std::move(*inv));
    }
    for (int a = 0; a < A.q.num_arrows(); ++a) {
        const auto& ar = A.q.arrows[a];
        N.mats[a] = mat_mul(f, g[ar.head], mat_mul(f, N.mats[a], ginv[ar.tail]));
    }
    return N;
}

// --- pointwise checks ----------------------------------------------------------

struct MembershipResult {
    bool all_vanish = true;
    int failed_generator = -1;  // index into the generator set when not vanishing
};

template <class F>
MembershipResult membership_test(const F& f, const GeneratorSet& gs, const Quiver& q,
                                 const Rep<F>& rep) {
    auto pt = point_from_rep(f, gs.vt, q, rep);
    for (int i = 0; i < (int)gs.gens.size(); ++i)
        if (!f.is_zero(gs.gens[i].p.evaluate(f, pt))) return {false, i};
    return {true, -1};
}

// Rank of the Jacobian of the generator set at the point; at a smooth point
// of the stratum this is its codimension in the matrix space.
template <class F>
int jacobian_codim(const F& f, const GeneratorSet& gs, const Quiver& q, const Rep<F>& rep) {
    auto pt = point_from_rep(f, gs.vt, q, rep);
    Mat<F> jac = Mat<F>::zero(f, (int)gs.gens.size(), gs.vt.count());
    for (int i = 0; i < (int)gs.gens.size(); ++i) {
        for (const auto& t : gs.gens[i].p.terms) {
            typename F::Elem base;
            if constexpr (std::is_same_v<F, Rat>) {
                base = t.coeff;
            } else {
                base = f.from_mpq(t.coeff);
            }
            // d(term)/d(v) summed over occurrences
            for (size_t k = 0; k < t.mono.size(); ++k) {
                auto prod = base;
                for (size_t l = 0; l < t.mono.size(); ++l)
                    if (l != k) prod = f.mul(prod, pt[t.mono[l]]);
                int v = t.mono[k];
                jac.at(i, v) = f.add(jac.at(i, v), prod);
            }
        }
    }
    return mat_rank(f, jac);
}

// --- probabilistic containment -------------------------------------------------

struct ContainmentReport {
    bool contained = true;
    int trials = 0;
    double per_eval_error_bound = 0.0;  // max generator degree / p, one-sided
    int violation_trial = -1;
    int violation_generator = -1;
};

ContainmentReport containment_test(const Algebra& A, const DimVec& d, const RankSeq& r_from,
                                   const RankSeq& r_to, const SampleConfig& cfg);

struct MaximalityReport {
    std::vector<RankSeq> nonempty;
    std::vector<RankSeq> maximal;               // under sampled containment
    std::vector<RankSeq> predicted_components;  // u/v criterion
    bool agree = false;
    double per_eval_error_bound = 0.0;
};

// Pairwise containment among all nonempty strata on (A, d); maximal elements
// should match the component classification exactly.
MaximalityReport maximality_by_containment(const Algebra& A, const DimVec& d,
                                           const SampleConfig& cfg);

// --- dimension via Jacobian ----------------------------------------------------

struct CodimReport {
    bool ok = true;
    long long expected_dimension = 0;
    int ambient = 0;
    int points = 0;
    int resampled_points = 0;  // points that needed a retry seed
    int failed_point = -1;
    long long failed_dimension = 0;
};

// Checks ambient - jacobian_codim == component_dimension at sampled points;
// a point whose rank misbehaves is re-drawn with up to `reseeds` derived
// seeds before counting as a failure (the singular locus has measure ~deg/p
// per draw).
CodimReport codim_check(const Algebra& A, const DimVec& d, const RankSeq& r, int points,
                        const SampleConfig& cfg, int reseeds = 3);

// --- brute-force oracle ----------------------------------------------------------

struct OracleReport {
    std::vector<RankSeq> achieved;
    std::vector<RankSeq> predicted;
    bool agree = false;
    std::vector<RankSeq> achieved_not_predicted;
    std::vector<RankSeq> predicted_not_achieved;
    unsigned long long reps_checked = 0;  // leaves surviving the relation check
};

// Enumerates every F_q point of rep_A(d), records which x-rank vectors occur,
// and compares against the u-criterion prediction.  q in {2, 3}; total
// dimension <= 16.  The parallel variant is bit-identical to the serial one.
OracleReport achievable_rank_oracle(const Algebra& A, const DimVec& d, int q);
OracleReport achievable_rank_oracle_serial(const Algebra& A, const DimVec& d, int q);
OracleReport achievable_rank_oracle_parallel(const Algebra& A, const DimVec& d, int q);

// Serial enumeration of all relation-satisfying F_q points; the callback
// receives the dense entry array (arrow-major, row-major inside an arrow).
void enumerate_valid_reps(const Algebra& A, const DimVec& d, int q,
                          const std::function<void(const uint8_t*)>& cb);

// Entry layout helper shared by the kernels and their callers.
Rep<Fp> rep_from_entries(const Fp& f, const Quiver& q, const DimVec& d, const uint8_t* entries);

// --- endomorphisms ---------------------------------------------------------------

// Dimension of the space of quiver-representation endomorphisms (tuples of
// square matrices commuting with every arrow matrix).
template <class F>
int endomorphism_dim(const F& f, const Quiver& q, const Rep<F>& rep) {
    validate_rep_shapes(q, rep);
    std::vector<int> offset(q.num_vertices() + 1, 0);
    for (int v = 0; v < q.num_vertices(); ++v)
        offset[v + 1] = offset[v] + rep.dim[v] * rep.dim[v];
    int unknowns = offset.back();
    int eqs = 0;
    for (const auto& ar : q.arrows) eqs += rep.dim[ar.head] * rep.dim[ar.tail];
    Mat<F> sys = Mat<F>::zero(f, eqs, unknowns);
    int row = 0;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const auto& ar = q.arrows[a];
        int dh = rep.dim[ar.head], dt = rep.dim[ar.tail];
        for (int i = 0; i < dh; ++i)
            for (int j = 0; j < dt; ++j) {
                // (phi_head M - M phi_tail)_{ij} = 0
                for (int k = 0; k < dh; ++k)
                    sys.at(row, offset[ar.head] + i * dh + k) =
                        f.add(sys.at(row, offset[ar.head] + i * dh + k), rep.mats[a].at(k, j));
                for (int k = 0; k < dt; ++k)
                    sys.at(row, offset[ar.tail] + k * dt + j) =
                        f.sub(sys.at(row, offset[ar.tail] + k * dt + j), rep.mats[a].at(i, k));
                ++row;
            }
    }
    return unknowns - mat_rank(f, sys);
}

template <class F>
bool is_schur(const F& f, const Quiver& q, const Rep<F>& rep) {
    return endomorphism_dim(f, q, rep) == 1;
}

// Additivity of endomorphism dimension along the splitting embedding, checked
// on freshly sampled split-side points with full sink-copy rank.
struct EndoAdditivityReport {
    bool ok = true;
    int trials = 0;
    int failed_trial = -1;
    int lhs = 0, rhs = 0;
};

EndoAdditivityReport endo_additivity_check(const Algebra& A, int x, const DimVec& d, int r,
                                           int trials, const SampleConfig& cfg);

// --- semistability -----------------------------------------------------------------

// All subspaces of F_q^n as reduced-echelon row bases.
std::vector<Mat<Fp>> all_subspaces(const Fp& f, int n);

// Exhaustive King-style test: theta . dim M = 0 and theta . dim N <= 0 for
// every subrepresentation N (strict < 0 on proper nonzero N when stable=true).
bool is_semistable_bruteforce(const Fp& f, const Algebra& A, const Rep<Fp>& M,
                              const Weight& theta, bool stable = false);

// Per-instance consistency sweep: every semistable point passes the node
// shape law at every vertex, and semistability verdicts agree before and
// after reduce_by_weight, point by point.
struct ModuliSweepReport {
    bool ok = true;
    unsigned long long points = 0;
    unsigned long long semistable_points = 0;
    std::string failure;  // empty when ok
};

ModuliSweepReport moduli_consistency_check(const Algebra& A, const DimVec& d, const Weight& theta,
                                           int q);

// --- saturation oracle ---------------------------------------------------------------

// Span of n random rational GL(d(x))-translates of P; cross-validates
// saturate_span.  Returns the reduced echelon basis.
std::vector<Poly> random_translate_span(const std::vector<Poly>& P, const Quiver& q,
                                        const DimVec& d, const VarTable& vt, int x,
                                        int n_translates, uint64_t seed);

nlohmann::json rankseq_list_to_json(const Quiver& q, const std::vector<RankSeq>& rs);

}  // namespace qrv
