#include "qrv/verify.hpp"

#include <algorithm>
#include <map>

namespace qrv {

namespace {

// all rank sequences in the box prod [0, d(x)], lexicographic, last vertex fastest
void for_each_rank(const DimVec& d, const std::function<void(const RankSeq&)>& cb) {
    RankSeq r(d.size(), 0);
    for (;;) {
        cb(r);
        int i = (int)d.size() - 1;
        while (i >= 0 && r[i] == d[i]) r[i--] = 0;
        if (i < 0) return;
        ++r[i];
    }
}

std::vector<RankSeq> nonempty_strata(const Quiver& q, const DimVec& d) {
    std::vector<RankSeq> out;
    for_each_rank(d, [&](const RankSeq& r) {
        if (is_nonempty(q, d, r)) out.push_back(r);
    });
    return out;
}

int max_degree(const GeneratorSet& gs) {
    int m = 0;
    for (const auto& g : gs.gens) m = std::max(m, g.p.degree());
    return m;
}

}  // namespace

// --- containment -----------------------------------------------------------------

ContainmentReport containment_test(const Algebra& A, const DimVec& d, const RankSeq& r_from,
                                   const RankSeq& r_to, const SampleConfig& cfg) {
    GeneratorSet gs = generators_for_component(A, d, r_to);
    Fp f(cfg.prime);
    ContainmentReport rep;
    rep.trials = cfg.trials;
    rep.per_eval_error_bound = (double)max_degree(gs) / (double)cfg.prime;
    for (int t = 0; t < cfg.trials; ++t) {
        auto pt = sample_component_point(f, A, d, r_from, derive_seed(cfg.seed, 1, (uint64_t)t),
                                         cfg.retry_budget);
        auto mr = membership_test(f, gs, A.q, pt);
        if (!mr.all_vanish) {
            rep.contained = false;
            rep.violation_trial = t;
            rep.violation_generator = mr.failed_generator;
            break;
        }
    }
    return rep;
}

MaximalityReport maximality_by_containment(const Algebra& A, const DimVec& d,
                                           const SampleConfig& cfg) {
    MaximalityReport out;
    out.nonempty = nonempty_strata(A.q, d);
    Fp f(cfg.prime);

    int n = (int)out.nonempty.size();
    std::vector<GeneratorSet> gens;
    gens.reserve(n);
    int maxdeg = 0;
    for (const auto& r : out.nonempty) {
        gens.push_back(generators_for_component(A, d, r));
        maxdeg = std::max(maxdeg, max_degree(gens.back()));
    }
    out.per_eval_error_bound = (double)maxdeg / (double)cfg.prime;

    // sampled points of each stratum, as flat coordinate vectors
    std::vector<std::vector<std::vector<uint64_t>>> pts(n);
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < cfg.trials; ++t) {
            auto rep = sample_component_point(f, A, d, out.nonempty[i],
                                              derive_seed(cfg.seed, (uint64_t)i + 2, (uint64_t)t),
                                              cfg.retry_budget);
            pts[i].push_back(point_from_rep(f, gens[i].vt, A.q, rep));
        }

    auto contained = [&](int i, int j) {
        for (const auto& pt : pts[i])
            for (const auto& g : gens[j].gens)
                if (!f.is_zero(g.p.evaluate(f, pt))) return false;
        return true;
    };

    for (int i = 0; i < n; ++i) {
        bool maximal = true;
        for (int j = 0; j < n && maximal; ++j)
            if (j != i && contained(i, j)) maximal = false;
        if (maximal) out.maximal.push_back(out.nonempty[i]);
    }
    for (const auto& rec : enumerate_components(A, d)) out.predicted_components.push_back(rec.r);
    out.agree = out.maximal == out.predicted_components;
    return out;
}

// --- dimension -----------------------------------------------------------------

CodimReport codim_check(const Algebra& A, const DimVec& d, const RankSeq& r, int points,
                        const SampleConfig& cfg, int reseeds) {
    GeneratorSet gs = generators_for_component(A, d, r);
    Fp f(cfg.prime);
    CodimReport rep;
    rep.expected_dimension = component_dimension(A.q, d, r);
    rep.ambient = gs.vt.count();
    rep.points = points;
    for (int p = 0; p < points; ++p) {
        long long got = -1;
        bool good = false;
        // the Jacobian can drop rank on the singular locus; re-draw a few times
        for (int s = 0; s < reseeds && !good; ++s) {
            auto pt = sample_component_point(f, A, d, r,
                                             derive_seed(cfg.seed, 101 + (uint64_t)s, (uint64_t)p),
                                             cfg.retry_budget);
            got = rep.ambient - jacobian_codim(f, gs, A.q, pt);
            if (got == rep.expected_dimension) {
                good = true;
                if (s > 0) ++rep.resampled_points;
            }
        }
        if (!good) {
            rep.ok = false;
            rep.failed_point = p;
            rep.failed_dimension = got;
            return rep;
        }
    }
    return rep;
}

// --- oracle wrappers (kernels live in verify_kernels.cpp) ---------------------------

OracleReport achievable_rank_oracle(const Algebra& A, const DimVec& d, int q) {
#ifdef _OPENMP
    return achievable_rank_oracle_parallel(A, d, q);
#else
    return achievable_rank_oracle_serial(A, d, q);
#endif
}

// --- endomorphism additivity -----------------------------------------------------

EndoAdditivityReport endo_additivity_check(const Algebra& A, int x, const DimVec& d, int r,
                                           int trials, const SampleConfig& cfg) {
    validate_dimvec(A.q, d);
    require(x >= 0 && x < A.q.num_vertices(), "vertex index out of range");
    require(r >= 0 && r <= d[x], "rank out of range");
    require(is_node(A, x), "endomorphism additivity is relative to a node");
    SplitResult sr = split_node(A, x);
    require(sr.algebra.effective_relations().empty(),
            "additivity check needs a relation-free split algebra");
    DimVec e = split_dimvec(A, x, d, r);

    Fp f(cfg.prime);
    EndoAdditivityReport rep;
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        Rep<Fp> M;
        bool full = false;
        // want the sink copy hit with full rank; retry on the measure-zero miss
        for (int s = 0; s < cfg.retry_budget && !full; ++s) {
            Rng rng(derive_seed(cfg.seed, 7 + (uint64_t)s, (uint64_t)t));
            M.dim = e;
            M.mats.clear();
            for (const auto& ar : sr.algebra.q.arrows)
                M.mats.push_back(random_matrix(f, rng, e[ar.head], e[ar.tail]));
            full = x_rank(f, sr.algebra.q, M, sr.x_h) == r;
        }
        require(full, "could not sample a full-rank point for the additivity check");
        Rep<Fp> emb = embed_representation(f, A, x, d, r, M);
        int lhs = endomorphism_dim(f, A.q, emb);
        int rhs = endomorphism_dim(f, sr.algebra.q, M) + r * (d[x] - r);
        if (lhs != rhs) {
            rep.ok = false;
            rep.failed_trial = t;
            rep.lhs = lhs;
            rep.rhs = rhs;
            return rep;
        }
    }
    return rep;
}

// --- semistability ---------------------------------------------------------------

namespace {

bool next_combination(std::vector<int>& c, int n) {
    int k = (int)c.size();
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<Mat<Fp>> all_subspaces(const Fp& f, int n) {
    require(n >= 0 && n <= 6, "subspace enumeration capped at dimension 6");
    require(f.modulus() <= 5, "subspace enumeration expects a tiny field");
    uint64_t q = f.modulus();
    std::vector<Mat<Fp>> out;
    for (int k = 0; k <= n; ++k) {
        std::vector<int> piv(k);
        for (int i = 0; i < k; ++i) piv[i] = i;
        bool more = true;
        while (more) {
            // free entries of the echelon form: right of the pivot, not a pivot column
            std::vector<std::pair<int, int>> free_pos;
            std::vector<bool> is_piv(n, false);
            for (int p : piv) is_piv[p] = true;
            for (int i = 0; i < k; ++i)
                for (int j = piv[i] + 1; j < n; ++j)
                    if (!is_piv[j]) free_pos.emplace_back(i, j);
            std::vector<uint64_t> val(free_pos.size(), 0);
            for (;;) {
                Mat<Fp> m = Mat<Fp>::zero(f, k, n);
                for (int i = 0; i < k; ++i) m.at(i, piv[i]) = 1;
                for (size_t t = 0; t < free_pos.size(); ++t)
                    m.at(free_pos[t].first, free_pos[t].second) = val[t];
                out.push_back(std::move(m));
                int i = (int)val.size() - 1;
                while (i >= 0 && val[i] == q - 1) val[i--] = 0;
                if (i < 0) break;
                ++val[i];
            }
            more = k > 0 && next_combination(piv, n);
        }
    }
    return out;
}

namespace {

// is the column vector v in the row span of the echelon basis?
bool in_row_span(const Fp& f, std::vector<uint64_t> v, const Mat<Fp>& basis) {
    for (int i = 0; i < basis.rows; ++i) {
        int piv = -1;
        for (int j = 0; j < basis.cols; ++j)
            if (!f.is_zero(basis.at(i, j))) {
                piv = j;
                break;
            }
        if (piv < 0) continue;
        uint64_t c = f.mul(v[piv], f.inv(basis.at(i, piv)));
        if (f.is_zero(c)) continue;
        for (int j = 0; j < basis.cols; ++j) v[j] = f.sub(v[j], f.mul(c, basis.at(i, j)));
    }
    for (auto e : v)
        if (!f.is_zero(e)) return false;
    return true;
}

}  // namespace

bool is_semistable_given(const Fp& f, const Algebra& A, const Rep<Fp>& M, const Weight& theta,
                         bool stable, const std::vector<const std::vector<Mat<Fp>>*>& subs_at) {
    int nv = A.q.num_vertices();
    long long pairing = 0;
    for (int v = 0; v < nv; ++v) pairing += (long long)theta[v] * M.dim[v];
    require(pairing == 0, "weight must pair to zero with the dimension vector");

    std::vector<int> idx(nv, 0);
    for (;;) {
        // candidate subrepresentation: one subspace per vertex
        bool invariant = true;
        for (int a = 0; a < A.q.num_arrows() && invariant; ++a) {
            const auto& ar = A.q.arrows[a];
            const Mat<Fp>& nt = (*subs_at[ar.tail])[idx[ar.tail]];
            const Mat<Fp>& nh = (*subs_at[ar.head])[idx[ar.head]];
            for (int b = 0; b < nt.rows && invariant; ++b) {
                std::vector<uint64_t> img(M.dim[ar.head], 0);
                for (int i = 0; i < M.dim[ar.head]; ++i) {
                    uint64_t s = 0;
                    for (int j = 0; j < M.dim[ar.tail]; ++j)
                        s = f.add(s, f.mul(M.mats[a].at(i, j), nt.at(b, j)));
                    img[i] = s;
                }
                invariant = in_row_span(f, std::move(img), nh);
            }
        }
        if (invariant) {
            long long s = 0;
            bool zero = true, whole = true;
            for (int v = 0; v < nv; ++v) {
                int k = (*subs_at[v])[idx[v]].rows;
                s += (long long)theta[v] * k;
                if (k > 0) zero = false;
                if (k < M.dim[v]) whole = false;
            }
            if (s > 0) return false;
            if (stable && s == 0 && !zero && !whole) return false;
        }
        int i = nv - 1;
        while (i >= 0 && idx[i] + 1 == (int)subs_at[i]->size()) idx[i--] = 0;
        if (i < 0) return true;
        ++idx[i];
    }
}

bool is_semistable_bruteforce(const Fp& f, const Algebra& A, const Rep<Fp>& M, const Weight& theta,
                              bool stable) {
    validate_weight(A.q, theta);
    validate_rep_shapes(A.q, M);
    std::map<int, std::vector<Mat<Fp>>> by_dim;
    for (int v = 0; v < A.q.num_vertices(); ++v)
        if (!by_dim.count(M.dim[v])) by_dim[M.dim[v]] = all_subspaces(f, M.dim[v]);
    std::vector<const std::vector<Mat<Fp>>*> subs_at;
    for (int v = 0; v < A.q.num_vertices(); ++v) subs_at.push_back(&by_dim[M.dim[v]]);
    return is_semistable_given(f, A, M, theta, stable, subs_at);
}

// --- moduli sweep -----------------------------------------------------------------

ModuliSweepReport moduli_consistency_check(const Algebra& A, const DimVec& d, const Weight& theta,
                                           int q) {
    validate_dimvec(A.q, d);
    validate_weight(A.q, theta);
    require(A.is_rad_square_zero(), "consistency sweep expects a radical-square-zero algebra");
    long long pairing = 0;
    for (int v = 0; v < A.q.num_vertices(); ++v) pairing += (long long)theta[v] * d[v];
    require(pairing == 0, "weight must pair to zero with the dimension vector");

    Fp f((uint64_t)q);
    ReducedAlgebra red = reduce_by_weight(A, theta);
    Weight theta_red = strip_weight(f, red, theta);

    std::map<int, std::vector<Mat<Fp>>> by_dim;
    auto subs_for = [&](const DimVec& dims) {
        std::vector<const std::vector<Mat<Fp>>*> at;
        for (int dim : dims) {
            if (!by_dim.count(dim)) by_dim[dim] = all_subspaces(f, dim);
            at.push_back(&by_dim[dim]);
        }
        return at;
    };
    auto subs_full = subs_for(d);
    DimVec d_red;
    for (int v : red.kept_vertices) d_red.push_back(d[v]);
    auto subs_red = subs_for(d_red);

    ModuliSweepReport rep;
    enumerate_valid_reps(A, d, q, [&](const uint8_t* entries) {
        if (!rep.ok) return;
        ++rep.points;
        Rep<Fp> M = rep_from_entries(f, A.q, d, entries);
        bool ss = is_semistable_given(f, A, M, theta, false, subs_full);
        if (ss) {
            ++rep.semistable_points;
            for (int x = 0; x < A.q.num_vertices(); ++x) {
                if (node_shape_check(f, A, M, theta, x) == NodeShape::violation) {
                    rep.ok = false;
                    rep.failure = "node shape violated at vertex " + A.q.vertices[x] +
                                  " on a semistable point";
                    return;
                }
            }
        }
        Rep<Fp> Mred = strip_representation(f, red, M);
        bool ss_red = is_semistable_given(f, red.algebra, Mred, theta_red, false, subs_red);
        if (ss != ss_red) {
            rep.ok = false;
            rep.failure = std::string("semistability changed under weight reduction (") +
                          (ss ? "true" : "false") + " vs " + (ss_red ? "true" : "false") + ")";
        }
    });
    return rep;
}

// --- saturation oracle -------------------------------------------------------------

std::vector<Poly> random_translate_span(const std::vector<Poly>& P, const Quiver& q,
                                        const DimVec& d, const VarTable& vt, int x,
                                        int n_translates, uint64_t seed) {
    require(x >= 0 && x < q.num_vertices(), "vertex index out of range");
    Rat f;
    LinearSpan span;
    for (const auto& p : P) span.insert(p);

    Rng rng(seed);
    for (int t = 0; t < n_translates; ++t) {
        Mat<Rat> g = random_invertible(f, rng, d[x]);
        Mat<Rat> gi = *mat_inverse(f, g);
        // variable -> linear polynomial, identity away from x
        std::vector<Poly> subs;
        subs.reserve(vt.count());
        for (int v = 0; v < vt.count(); ++v) subs.push_back(Poly::variable(v));
        for (int a = 0; a < q.num_arrows(); ++a) {
            const auto& ar = q.arrows[a];
            bool at_head = ar.head == x, at_tail = ar.tail == x;
            if (!at_head && !at_tail) continue;
            int rows = d[ar.head], cols = d[ar.tail];
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) {
                    Poly acc;
                    if (at_head && at_tail) {
                        for (int k = 0; k < rows; ++k)
                            for (int l = 0; l < cols; ++l) {
                                mpq_class c = g.at(i, k) * gi.at(l, j);
                                if (c == 0) continue;
                                acc += Poly::variable(vt.index(a, k, l)).scaled(c);
                            }
                    } else if (at_head) {
                        for (int k = 0; k < rows; ++k) {
                            if (g.at(i, k) == 0) continue;
                            acc += Poly::variable(vt.index(a, k, j)).scaled(g.at(i, k));
                        }
                    } else {
                        for (int k = 0; k < cols; ++k) {
                            if (gi.at(k, j) == 0) continue;
                            acc += Poly::variable(vt.index(a, i, k)).scaled(gi.at(k, j));
                        }
                    }
                    subs[vt.index(a, i, j)] = std::move(acc);
                }
        }
        std::vector<const Poly*> ptrs;
        ptrs.reserve(subs.size());
        for (const auto& s : subs) ptrs.push_back(&s);
        for (const auto& p : P) span.insert(p.substitute(ptrs));
    }
    return span.basis();
}

nlohmann::json rankseq_list_to_json(const Quiver& q, const std::vector<RankSeq>& rs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) {
        nlohmann::json o;
        for (int v = 0; v < q.num_vertices(); ++v) o[q.vertices[v]] = r[v];
        arr.push_back(o);
    }
    return arr;
}

}  // namespace qrv
