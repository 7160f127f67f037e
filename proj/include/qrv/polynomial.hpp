#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrv/field.hpp"
#include "qrv/quiver.hpp"

namespace qrv {

// Coordinate variables of the matrix space of (Q, d): one variable per matrix
// entry, densely indexed in (arrow declaration order, row, column).  Printed
// as x_<arrowid>_<row>_<col> with 1-based row/col.
class VarTable {
  public:
    struct Info {
        int arrow;
        int row;
        int col;
    };

    VarTable() = default;
    VarTable(const Quiver& q, const DimVec& d);

    int count() const { return total_; }
    int index(int arrow, int row, int col) const;
    Info info(int v) const;
    std::string name(int v) const;
    int arrow_rows(int a) const { return shapes_[a].first; }
    int arrow_cols(int a) const { return shapes_[a].second; }
    int num_arrows() const { return (int)shapes_.size(); }
    const std::string& arrow_id(int a) const { return arrow_ids_[a]; }
    int arrow_index(const std::string& id) const;

    bool operator==(const VarTable& o) const {
        return arrow_ids_ == o.arrow_ids_ && shapes_ == o.shapes_;
    }

  private:
    std::vector<std::string> arrow_ids_;
    std::vector<std::pair<int, int>> shapes_;
    std::vector<int> offsets_;
    int total_ = 0;
};

// Monomial: sorted (ascending) variable indices with repetition.
using Mono = std::vector<int>;

// Graded-lexicographic: degree first, then lexicographic on the sorted index
// sequence.  This is the canonical order behind every printed polynomial.
int mono_cmp(const Mono& a, const Mono& b);

struct Term {
    mpq_class coeff;
    Mono mono;
};

// Sparse polynomial with rational coefficients.  Terms are kept sorted
// ascending under mono_cmp with no zero coefficients, so equal polynomials
// have identical term vectors.
class Poly {
  public:
    std::vector<Term> terms;

    static Poly zero() { return Poly{}; }
    static Poly constant(const mpq_class& c);
    static Poly variable(int v);

    bool is_zero() const { return terms.empty(); }
    int degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;
    const Term& leading() const;  // highest term; polynomial must be nonzero

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scaled(const mpq_class& c) const;
    Poly derivative(int v) const;

    // Simultaneous substitution; images[v] == nullptr keeps variable v.
    Poly substitute(const std::vector<const Poly*>& images) const;

    template <class F>
    typename F::Elem evaluate(const F& f, const std::vector<typename F::Elem>& point) const;

    std::string to_string(const VarTable& vt) const;

    bool operator==(const Poly& o) const;
};

// Strict total order used for canonical generator lists: degree, then the
// term vectors compared from the highest term down.
bool poly_less(const Poly& a, const Poly& b);

// Reduced echelon basis of a rational span of polynomials, with leading
// monomials as pivots.  The fully inter-reduced basis is unique per span, so
// any insertion order yields the same rows.
class LinearSpan {
  public:
    Poly reduce(Poly p) const;
    bool insert(Poly p);  // returns true when the dimension grew
    bool contains(const Poly& p) const { return reduce(p).is_zero(); }
    int dim() const { return (int)rows_.size(); }
    std::vector<Poly> basis() const;  // sorted by poly_less

  private:
    struct MonoLess {
        bool operator()(const Mono& a, const Mono& b) const { return mono_cmp(a, b) < 0; }
    };
    std::map<Mono, Poly, MonoLess> rows_;
};

// --- polynomial JSON -------------------------------------------------------

// [{ "terms": [{"coeff": c, "monomial": [["arrow", row, col], ...]}, ...] }]
// with 1-based row/col and coeff an integer or an "n/d" string.
nlohmann::json poly_to_json(const VarTable& vt, const Poly& p);
Poly poly_from_json(const VarTable& vt, const nlohmann::json& j);
nlohmann::json poly_list_to_json(const VarTable& vt, const std::vector<Poly>& ps);
std::vector<Poly> poly_list_from_json(const VarTable& vt, const nlohmann::json& j);

// --- template bodies -------------------------------------------------------

template <class F>
typename F::Elem Poly::evaluate(const F& f, const std::vector<typename F::Elem>& point) const {
    auto acc = f.zero();
    for (const auto& t : terms) {
        typename F::Elem v;
        if constexpr (std::is_same_v<F, Rat>) {
            v = t.coeff;
        } else {
            v = f.from_mpq(t.coeff);
        }
        for (int var : t.mono) v = f.mul(v, point[var]);
        acc = f.add(acc, v);
    }
    return acc;
}

}  // namespace qrv
