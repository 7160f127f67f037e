#include "qrv/ideals.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace qrv {

SymbolicMatrix coordinate_matrix(const VarTable& vt, int arrow) {
    SymbolicMatrix m(vt.arrow_rows(arrow), vt.arrow_cols(arrow));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = Poly::variable(vt.index(arrow, i, j));
    return m;
}

SymbolicMatrix build_H(const Quiver& q, const DimVec& d, const VarTable& vt, int x) {
    require(x >= 0 && x < q.num_vertices(), "vertex index out of range");
    int cols = 0;
    for (int a : q.in_arrows[x]) cols += d[q.arrows[a].tail];
    SymbolicMatrix m(d[x], cols);
    int off = 0;
    for (int a : q.in_arrows[x]) {
        int w = d[q.arrows[a].tail];
        for (int i = 0; i < d[x]; ++i)
            for (int j = 0; j < w; ++j) m.at(i, off + j) = Poly::variable(vt.index(a, i, j));
        off += w;
    }
    return m;
}

SymbolicMatrix build_T(const Quiver& q, const DimVec& d, const VarTable& vt, int x) {
    require(x >= 0 && x < q.num_vertices(), "vertex index out of range");
    int rows = 0;
    for (int a : q.out_arrows[x]) rows += d[q.arrows[a].head];
    SymbolicMatrix m(rows, d[x]);
    int off = 0;
    for (int a : q.out_arrows[x]) {
        int h = d[q.arrows[a].head];
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < d[x]; ++j) m.at(off + i, j) = Poly::variable(vt.index(a, i, j));
        off += h;
    }
    return m;
}

SymbolicMatrix sym_mul(const SymbolicMatrix& a, const SymbolicMatrix& b) {
    require(a.cols == b.rows, "symbolic product shape mismatch");
    SymbolicMatrix z(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols; ++j) {
                if (b.at(k, j).is_zero()) continue;
                z.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return z;
}

Poly sym_trace(const SymbolicMatrix& m) {
    require(m.rows == m.cols, "trace of non-square symbolic matrix");
    Poly t;
    for (int i = 0; i < m.rows; ++i) t += m.at(i, i);
    return t;
}

namespace {

// Laplace expansion along the first remaining row, sub-minors memoized per
// column subset (the row prefix is determined by the popcount).
Poly minor_rec(const SymbolicMatrix& m, const std::vector<int>& rows, uint32_t colmask,
               int level, const std::vector<int>& cols, std::map<uint32_t, Poly>& memo) {
    if (colmask == 0) return Poly::constant(1);
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    Poly acc;
    int sign = 1;
    int row = rows[level];
    for (size_t ci = 0; ci < cols.size(); ++ci) {
        uint32_t bit = uint32_t{1} << ci;
        if (!(colmask & bit)) continue;
        const Poly& entry = m.at(row, cols[ci]);
        if (!entry.is_zero()) {
            Poly sub = minor_rec(m, rows, colmask & ~bit, level + 1, cols, memo);
            Poly contrib = entry * sub;
            acc += (sign > 0) ? contrib : -contrib;
        }
        sign = -sign;
    }
    memo.emplace(colmask, acc);
    return acc;
}

bool next_combination(std::vector<int>& c, int n) {
    int k = (int)c.size();
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - (k - i)) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> first_combination(int k) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    return c;
}

}  // namespace

std::vector<Poly> minors(const SymbolicMatrix& m, int k) {
    require(k >= 1, "minor order must be positive");
    std::vector<Poly> out;
    if (k > m.rows || k > m.cols) return out;
    require(k <= 31, "minor order too large");
    std::vector<int> rows = first_combination(k);
    do {
        std::vector<int> cols = first_combination(k);
        do {
            std::map<uint32_t, Poly> memo;
            uint32_t full = (k == 31) ? 0x7fffffffu : ((uint32_t{1} << k) - 1);
            out.push_back(minor_rec(m, rows, full, 0, cols, memo));
        } while (next_combination(cols, m.cols));
    } while (next_combination(rows, m.rows));
    return out;
}

const char* family_name(GenFamily f) {
    switch (f) {
        case GenFamily::minor_H: return "minor_H";
        case GenFamily::minor_T: return "minor_T";
        case GenFamily::product_TH: return "product_TH";
        case GenFamily::trace_loop: return "trace_loop";
        case GenFamily::saturated_P: return "saturated_P";
    }
    return "?";
}

namespace {

struct PolyTotalLess {
    bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
};

// Shared assembly: dedup by exact polynomial equality (first tag wins), drop
// zeros, then canonical order.
void append_family(std::vector<TaggedPoly>& gens, std::set<Poly, PolyTotalLess>& seen,
                   const std::vector<Poly>& ps, GenFamily fam) {
    for (const auto& p : ps) {
        if (p.is_zero()) continue;
        if (!seen.insert(p).second) continue;
        gens.push_back({p, fam});
    }
}

void vertex_families(const Algebra& A, const DimVec& d, const RankSeq& r, const VarTable& vt,
                     int x, std::vector<TaggedPoly>& gens, std::set<Poly, PolyTotalLess>& seen) {
    SymbolicMatrix H = build_H(A.q, d, vt, x);
    SymbolicMatrix T = build_T(A.q, d, vt, x);
    append_family(gens, seen, minors(H, r[x] + 1), GenFamily::minor_H);
    append_family(gens, seen, minors(T, d[x] - r[x] + 1), GenFamily::minor_T);
    SymbolicMatrix TH = sym_mul(T, H);
    append_family(gens, seen, TH.e, GenFamily::product_TH);
    std::vector<Poly> traces;
    for (int a : A.q.out_arrows[x])
        if (A.q.arrows[a].head == x) traces.push_back(sym_trace(coordinate_matrix(vt, a)));
    append_family(gens, seen, traces, GenFamily::trace_loop);
}

void canonical_sort(std::vector<TaggedPoly>& gens) {
    std::stable_sort(gens.begin(), gens.end(),
                     [](const TaggedPoly& a, const TaggedPoly& b) { return poly_less(a.p, b.p); });
}

}  // namespace

GeneratorSet generators_for_component(const Algebra& A, const DimVec& d, const RankSeq& r) {
    validate_dimvec(A.q, d);
    validate_rank_range(d, r);
    require(A.is_rad_square_zero(),
            "component generators require a radical-square-zero algebra; "
            "use the relative workflow for other presentations");
    require(is_nonempty(A.q, d, r), "rank stratum is empty (u-criterion fails)");
    GeneratorSet gs;
    gs.vt = VarTable(A.q, d);
    std::set<Poly, PolyTotalLess> seen;
    for (int x = 0; x < A.q.num_vertices(); ++x) vertex_families(A, d, r, gs.vt, x, gs.gens, seen);
    canonical_sort(gs.gens);
    return gs;
}

std::vector<Poly> saturate_span(const std::vector<Poly>& polys, const Quiver& q, const DimVec& d,
                                const VarTable& vt, int x) {
    require(x >= 0 && x < q.num_vertices(), "vertex index out of range");
    for (const auto& p : polys)
        require(p.is_homogeneous(), "saturation input must be homogeneous");

    int n = d[x];
    // One derivation per (i, j): the infinitesimal base change E_ij acting on
    // in-arrow rows positively and out-arrow columns negatively; loops get
    // both halves.
    auto apply = [&](const Poly& p, int i, int j) {
        Poly out;
        std::set<int> vars;
        for (const auto& t : p.terms)
            for (int v : t.mono) vars.insert(v);
        for (int v : vars) {
            auto in = vt.info(v);
            const Arrow& ar = q.arrows[in.arrow];
            if (ar.head == x && in.row == j)
                out += Poly::variable(vt.index(in.arrow, i, in.col)) * p.derivative(v);
            if (ar.tail == x && in.col == i)
                out -= Poly::variable(vt.index(in.arrow, in.row, j)) * p.derivative(v);
        }
        return out;
    };

    LinearSpan span;
    std::deque<Poly> work;
    for (const auto& p : polys)
        if (span.insert(p)) work.push_back(p);
    while (!work.empty()) {
        Poly p = std::move(work.front());
        work.pop_front();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Poly img = apply(p, i, j);
                if (span.insert(img)) work.push_back(std::move(img));
            }
    }
    return span.basis();
}

Poly identify_split_polynomial(const Algebra& A, int x, const DimVec& d, int r,
                               const VarTable& split_vt, const VarTable& ambient_vt,
                               const Poly& p) {
    std::vector<const Poly*> images(split_vt.count(), nullptr);
    std::vector<Poly> storage(split_vt.count());
    for (int v = 0; v < split_vt.count(); ++v) {
        auto in = split_vt.info(v);
        const Arrow& ar = A.q.arrows[in.arrow];
        int row = in.row;
        int col = in.col;
        if (ar.tail == x) col += r;  // out-arrow and loop columns sit right of the rank block
        storage[v] = Poly::variable(ambient_vt.index(in.arrow, row, col));
        images[v] = &storage[v];
    }
    (void)d;
    return p.substitute(images);
}

GeneratorSet generators_relative(const Algebra& A, int x, const DimVec& d, int r,
                                 const std::vector<Poly>& split_P) {
    validate_dimvec(A.q, d);
    require(x >= 0 && x < A.q.num_vertices(), "vertex index out of range");
    require(r >= 0 && r <= d[x], "rank outside [0, d(x)]");
    require(is_node(A, x), "vertex \"" + A.q.vertices[x] + "\" is not a node");

    GeneratorSet gs;
    gs.vt = VarTable(A.q, d);
    std::set<Poly, PolyTotalLess> seen;

    RankSeq rseq(A.q.num_vertices(), 0);
    rseq[x] = r;
    vertex_families(A, d, rseq, gs.vt, x, gs.gens, seen);

    if (!split_P.empty()) {
        SplitResult sr = split_node(A, x);
        VarTable split_vt(sr.algebra.q, split_dimvec(A, x, d, r));
        std::vector<Poly> ambient;
        for (const auto& p : split_P) {
            require(p.is_homogeneous(), "relative family must be homogeneous");
            ambient.push_back(identify_split_polynomial(A, x, d, r, split_vt, gs.vt, p));
        }
        append_family(gs.gens, seen, saturate_span(ambient, A.q, d, gs.vt, x),
                      GenFamily::saturated_P);
    }
    canonical_sort(gs.gens);
    return gs;
}

ExportFormat parse_export_format(const std::string& s) {
    if (s == "plain") return ExportFormat::plain;
    if (s == "macaulay2") return ExportFormat::macaulay2;
    if (s == "singular") return ExportFormat::singular;
    fail("unknown export format \"" + s + "\" (plain, macaulay2, singular)");
}

std::string export_generators(const GeneratorSet& gs, ExportFormat fmt) {
    std::ostringstream os;
    auto var_list = [&](const char* sep) {
        std::string s;
        for (int v = 0; v < gs.vt.count(); ++v) {
            if (v) s += sep;
            s += gs.vt.name(v);
        }
        return s;
    };
    switch (fmt) {
        case ExportFormat::plain: {
            os << "# " << gs.gens.size() << " generators over QQ in " << gs.vt.count()
               << " variables\n";
            for (const auto& g : gs.gens) os << g.p.to_string(gs.vt) << "\n";
            break;
        }
        case ExportFormat::macaulay2: {
            os << "R = QQ[" << var_list(", ") << "];\n";
            if (gs.gens.empty()) {
                os << "I = ideal 0_R;\n";
            } else {
                os << "I = ideal(";
                for (size_t i = 0; i < gs.gens.size(); ++i) {
                    if (i) os << ",\n    ";
                    os << gs.gens[i].p.to_string(gs.vt);
                }
                os << ");\n";
            }
            break;
        }
        case ExportFormat::singular: {
            os << "ring R = 0, (" << var_list(", ") << "), dp;\n";
            os << "ideal I = ";
            if (gs.gens.empty()) {
                os << "0;\n";
            } else {
                for (size_t i = 0; i < gs.gens.size(); ++i) {
                    if (i) os << ",\n  ";
                    os << gs.gens[i].p.to_string(gs.vt);
                }
                os << ";\n";
            }
            break;
        }
    }
    return os.str();
}

}  // namespace qrv
