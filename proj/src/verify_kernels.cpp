#include <algorithm>
#include <array>
#include <cstring>

#include "qrv/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qrv {

namespace {

// flattened enumeration instance: entries of all arrow matrices in one
// uint8 array, arrow-major, row-major inside an arrow
struct KernelInstance {
    const Quiver* q = nullptr;
    DimVec d;
    int fq = 2;
    std::vector<int> off, cnt;
    int total = 0;
    std::vector<std::vector<std::vector<int>>> checks_at;  // relations closing at arrow i
    std::vector<unsigned long long> place;                 // rank-code radix, vertex 0 highest
    unsigned long long codes = 1;
};

KernelInstance build_instance(const Algebra& A, const DimVec& d, int fq) {
    validate_dimvec(A.q, d);
    require(fq == 2 || fq == 3, "oracle supports q = 2 or q = 3");
    int total_dim = 0;
    for (int x : d) total_dim += x;
    require(total_dim <= 16, "oracle capped at total dimension 16");

    KernelInstance k;
    k.q = &A.q;
    k.d = d;
    k.fq = fq;
    for (const auto& ar : A.q.arrows) {
        k.off.push_back(k.total);
        int c = d[ar.head] * d[ar.tail];
        k.cnt.push_back(c);
        k.total += c;
    }
    double work = 1;
    for (int i = 0; i < k.total; ++i) {
        work *= fq;
        require(work <= 2e8, "oracle instance too large");
    }
    k.checks_at.resize(A.q.num_arrows());
    for (const auto& rel : A.effective_relations()) {
        int last = 0;
        for (int a : rel) last = std::max(last, a);
        k.checks_at[last].push_back(rel);
    }
    if (!d.empty()) {
        k.place.assign(d.size(), 1);
        for (int v = (int)d.size() - 2; v >= 0; --v)
            k.place[v] = k.place[v + 1] * (unsigned long long)(d[v + 1] + 1);
        k.codes = k.place[0] * (unsigned long long)(d[0] + 1);
    }
    require(k.codes <= (1ull << 20), "rank code space too large");
    return k;
}

// does the path product vanish mod q at the current partial assignment?
// rel holds arrow indices in traversal order, first arrow applied first.
bool path_vanishes(const KernelInstance& k, const uint8_t* e, const std::vector<int>& rel) {
    const Quiver& q = *k.q;
    std::array<int, 256> acc{}, nxt{};
    int a0 = rel[0];
    int rows = k.d[q.arrows[a0].head], cols = k.d[q.arrows[a0].tail];
    for (int i = 0; i < rows * cols; ++i) acc[i] = e[k.off[a0] + i];
    for (size_t s = 1; s < rel.size(); ++s) {
        int a = rel[s];
        int r2 = k.d[q.arrows[a].head];
        const uint8_t* m = e + k.off[a];
        for (int i = 0; i < r2; ++i)
            for (int j = 0; j < cols; ++j) {
                int v = 0;
                for (int t = 0; t < rows; ++t) v += m[i * rows + t] * acc[t * cols + j];
                nxt[i * cols + j] = v % k.fq;
            }
        std::swap(acc, nxt);
        rows = r2;
    }
    for (int i = 0; i < rows * cols; ++i)
        if (acc[i] % k.fq != 0) return false;
    return true;
}

void recurse(const KernelInstance& k, int arrow, uint8_t* e,
             const std::function<void(const uint8_t*)>& leaf) {
    if (arrow == (int)k.cnt.size()) {
        leaf(e);
        return;
    }
    int c = k.cnt[arrow];
    uint8_t* base = e + k.off[arrow];
    std::memset(base, 0, (size_t)c);
    for (;;) {
        bool ok = true;
        for (const auto& rel : k.checks_at[arrow])
            if (!path_vanishes(k, e, rel)) {
                ok = false;
                break;
            }
        if (ok) recurse(k, arrow + 1, e, leaf);
        int i = c - 1;
        while (i >= 0 && base[i] == k.fq - 1) base[i--] = 0;
        if (i < 0) return;
        ++base[i];
    }
}

// rank of H_x mod q from the raw entry array
int leaf_x_rank(const KernelInstance& k, const uint8_t* e, int x) {
    const Quiver& q = *k.q;
    int rows = k.d[x], cols = 0;
    for (int a : q.in_arrows[x]) cols += k.d[q.arrows[a].tail];
    if (rows == 0 || cols == 0) return 0;
    std::array<int, 512> m{};
    int c0 = 0;
    for (int a : q.in_arrows[x]) {
        int w = k.d[q.arrows[a].tail];
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < w; ++j) m[i * cols + c0 + j] = e[k.off[a] + i * w + j];
        c0 += w;
    }
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i * cols + col] % k.fq != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(m[rank * cols + j], m[piv * cols + j]);
        int lead = m[rank * cols + col] % k.fq;
        int inv = 1;
        while ((lead * inv) % k.fq != 1) ++inv;
        for (int i = rank + 1; i < rows; ++i) {
            int fct = (m[i * cols + col] * inv) % k.fq;
            if (fct == 0) continue;
            for (int j = col; j < cols; ++j)
                m[i * cols + j] = (m[i * cols + j] + (k.fq - fct) * m[rank * cols + j]) % k.fq;
        }
        ++rank;
    }
    return rank;
}

unsigned long long leaf_code(const KernelInstance& k, const uint8_t* e) {
    unsigned long long code = 0;
    for (int v = 0; v < (int)k.d.size(); ++v)
        code += (unsigned long long)leaf_x_rank(k, e, v) * k.place[v];
    return code;
}

OracleReport assemble(const Algebra& A, const KernelInstance& k,
                      const std::vector<uint64_t>& bits, unsigned long long count) {
    OracleReport rep;
    rep.reps_checked = count;
    for (unsigned long long code = 0; code < k.codes; ++code)
        if (bits[code >> 6] & (1ull << (code & 63))) {
            RankSeq r(k.d.size());
            for (int v = 0; v < (int)k.d.size(); ++v)
                r[v] = (int)((code / k.place[v]) % (unsigned long long)(k.d[v] + 1));
            rep.achieved.push_back(std::move(r));
        }
    RankSeq r(k.d.size(), 0);
    for (;;) {
        if (is_nonempty(A.q, k.d, r)) rep.predicted.push_back(r);
        int i = (int)k.d.size() - 1;
        while (i >= 0 && r[i] == k.d[i]) r[i--] = 0;
        if (i < 0) break;
        ++r[i];
    }
    std::set_difference(rep.achieved.begin(), rep.achieved.end(), rep.predicted.begin(),
                        rep.predicted.end(), std::back_inserter(rep.achieved_not_predicted));
    std::set_difference(rep.predicted.begin(), rep.predicted.end(), rep.achieved.begin(),
                        rep.achieved.end(), std::back_inserter(rep.predicted_not_achieved));
    rep.agree = rep.achieved_not_predicted.empty() && rep.predicted_not_achieved.empty();
    return rep;
}

}  // namespace

Rep<Fp> rep_from_entries(const Fp& f, const Quiver& q, const DimVec& d, const uint8_t* entries) {
    Rep<Fp> rep;
    rep.dim = d;
    int off = 0;
    for (const auto& ar : q.arrows) {
        Mat<Fp> m = Mat<Fp>::zero(f, d[ar.head], d[ar.tail]);
        for (auto& x : m.a) x = entries[off++];
        rep.mats.push_back(std::move(m));
    }
    return rep;
}

void enumerate_valid_reps(const Algebra& A, const DimVec& d, int q,
                          const std::function<void(const uint8_t*)>& cb) {
    KernelInstance k = build_instance(A, d, q);
    std::vector<uint8_t> e((size_t)std::max(k.total, 1), 0);
    recurse(k, 0, e.data(), cb);
}

OracleReport achievable_rank_oracle_serial(const Algebra& A, const DimVec& d, int q) {
    KernelInstance k = build_instance(A, d, q);
    std::vector<uint64_t> bits((k.codes + 63) / 64, 0);
    unsigned long long count = 0;
    std::vector<uint8_t> e((size_t)std::max(k.total, 1), 0);
    recurse(k, 0, e.data(), [&](const uint8_t* ent) {
        unsigned long long code = leaf_code(k, ent);
        bits[code >> 6] |= 1ull << (code & 63);
        ++count;
    });
    return assemble(A, k, bits, count);
}

OracleReport achievable_rank_oracle_parallel(const Algebra& A, const DimVec& d, int q) {
    KernelInstance k = build_instance(A, d, q);
    if (k.cnt.empty()) return achievable_rank_oracle_serial(A, d, q);

    std::vector<uint64_t> bits((k.codes + 63) / 64, 0);
    unsigned long long count = 0;
    long long first = 1;
    for (int i = 0; i < k.cnt[0]; ++i) first *= k.fq;

    // split on the first arrow's assignments; the bitmap OR and the leaf
    // count are order independent, so this matches the serial kernel bit
    // for bit
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::vector<uint64_t> lbits(bits.size(), 0);
        unsigned long long lcount = 0;
        std::vector<uint8_t> e((size_t)std::max(k.total, 1), 0);
        auto leaf = [&](const uint8_t* ent) {
            unsigned long long code = leaf_code(k, ent);
            lbits[code >> 6] |= 1ull << (code & 63);
            ++lcount;
        };
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
        for (long long head = 0; head < first; ++head) {
            long long rem = head;
            for (int i = k.cnt[0] - 1; i >= 0; --i) {
                e[k.off[0] + i] = (uint8_t)(rem % k.fq);
                rem /= k.fq;
            }
            bool ok = true;
            for (const auto& rel : k.checks_at[0])
                if (!path_vanishes(k, e.data(), rel)) {
                    ok = false;
                    break;
                }
            if (ok) recurse(k, 1, e.data(), leaf);
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            for (size_t i = 0; i < bits.size(); ++i) bits[i] |= lbits[i];
            count += lcount;
        }
    }
    return assemble(A, k, bits, count);
}

}  // namespace qrv
