#include "qrv/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace qrv {

VarTable::VarTable(const Quiver& q, const DimVec& d) {
    validate_dimvec(q, d);
    for (const auto& a : q.arrows) {
        arrow_ids_.push_back(a.id);
        shapes_.push_back({d[a.head], d[a.tail]});
        offsets_.push_back(total_);
        total_ += d[a.head] * d[a.tail];
    }
}

int VarTable::index(int arrow, int row, int col) const {
    require(arrow >= 0 && arrow < (int)shapes_.size(), "variable arrow out of range");
    auto [rows, cols] = shapes_[arrow];
    require(row >= 0 && row < rows && col >= 0 && col < cols,
            "variable index outside matrix shape of arrow \"" + arrow_ids_[arrow] + "\"");
    return offsets_[arrow] + row * cols + col;
}

VarTable::Info VarTable::info(int v) const {
    require(v >= 0 && v < total_, "variable index out of range");
    int a = (int)(std::upper_bound(offsets_.begin(), offsets_.end(), v) - offsets_.begin()) - 1;
    int off = v - offsets_[a];
    int cols = shapes_[a].second;
    return Info{a, off / cols, off % cols};
}

std::string VarTable::name(int v) const {
    Info in = info(v);
    return "x_" + arrow_ids_[in.arrow] + "_" + std::to_string(in.row + 1) + "_" +
           std::to_string(in.col + 1);
}

int VarTable::arrow_index(const std::string& id) const {
    for (int a = 0; a < (int)arrow_ids_.size(); ++a)
        if (arrow_ids_[a] == id) return a;
    fail("unknown arrow \"" + id + "\" in variable table");
}

int mono_cmp(const Mono& a, const Mono& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

namespace {

// Sorts, merges equal monomials, drops zeros.
void normalize(std::vector<Term>& ts) {
    std::sort(ts.begin(), ts.end(),
              [](const Term& x, const Term& y) { return mono_cmp(x.mono, y.mono) < 0; });
    std::vector<Term> out;
    for (auto& t : ts) {
        if (!out.empty() && mono_cmp(out.back().mono, t.mono) == 0) {
            out.back().coeff += t.coeff;
            if (sgn(out.back().coeff) == 0) out.pop_back();
        } else if (sgn(t.coeff) != 0) {
            out.push_back(std::move(t));
        }
    }
    ts = std::move(out);
}

}  // namespace

Poly Poly::constant(const mpq_class& c) {
    Poly p;
    if (sgn(c) != 0) p.terms.push_back({c, {}});
    return p;
}

Poly Poly::variable(int v) {
    Poly p;
    p.terms.push_back({mpq_class(1), {v}});
    return p;
}

int Poly::degree() const { return terms.empty() ? -1 : (int)terms.back().mono.size(); }

bool Poly::is_homogeneous() const {
    if (terms.empty()) return true;
    size_t d = terms.front().mono.size();
    for (const auto& t : terms)
        if (t.mono.size() != d) return false;
    return true;
}

const Term& Poly::leading() const {
    require(!terms.empty(), "leading term of the zero polynomial");
    return terms.back();
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms) t.coeff = -t.coeff;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    std::vector<Term> merged;
    merged.reserve(terms.size() + o.terms.size());
    size_t i = 0, j = 0;
    while (i < terms.size() && j < o.terms.size()) {
        int c = mono_cmp(terms[i].mono, o.terms[j].mono);
        if (c < 0) {
            merged.push_back(std::move(terms[i++]));
        } else if (c > 0) {
            merged.push_back(o.terms[j++]);
        } else {
            Term t = std::move(terms[i++]);
            t.coeff += o.terms[j++].coeff;
            if (sgn(t.coeff) != 0) merged.push_back(std::move(t));
        }
    }
    while (i < terms.size()) merged.push_back(std::move(terms[i++]));
    while (j < o.terms.size()) merged.push_back(o.terms[j++]);
    terms = std::move(merged);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
    std::vector<Term> prods;
    prods.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            Term t;
            t.coeff = ta.coeff * tb.coeff;
            t.mono.resize(ta.mono.size() + tb.mono.size());
            std::merge(ta.mono.begin(), ta.mono.end(), tb.mono.begin(), tb.mono.end(),
                       t.mono.begin());
            prods.push_back(std::move(t));
        }
    normalize(prods);
    Poly p;
    p.terms = std::move(prods);
    return p;
}

Poly Poly::scaled(const mpq_class& c) const {
    if (sgn(c) == 0) return Poly::zero();
    Poly p = *this;
    for (auto& t : p.terms) t.coeff *= c;
    return p;
}

Poly Poly::derivative(int v) const {
    std::vector<Term> out;
    for (const auto& t : terms) {
        auto range = std::equal_range(t.mono.begin(), t.mono.end(), v);
        long mult = range.second - range.first;
        if (mult == 0) continue;
        Term d;
        d.coeff = t.coeff * mult;
        d.mono.assign(t.mono.begin(), t.mono.end());
        d.mono.erase(std::lower_bound(d.mono.begin(), d.mono.end(), v));
        out.push_back(std::move(d));
    }
    normalize(out);
    Poly p;
    p.terms = std::move(out);
    return p;
}

Poly Poly::substitute(const std::vector<const Poly*>& images) const {
    Poly acc;
    for (const auto& t : terms) {
        Poly prod = Poly::constant(t.coeff);
        for (int v : t.mono) {
            if (v < (int)images.size() && images[v] != nullptr) {
                prod = prod * (*images[v]);
            } else {
                prod = prod * Poly::variable(v);
            }
        }
        acc += prod;
    }
    return acc;
}

bool Poly::operator==(const Poly& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (size_t i = 0; i < terms.size(); ++i)
        if (mono_cmp(terms[i].mono, o.terms[i].mono) != 0 || cmp(terms[i].coeff, o.terms[i].coeff) != 0)
            return false;
    return true;
}

bool poly_less(const Poly& a, const Poly& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    size_t i = a.terms.size(), j = b.terms.size();
    while (i > 0 && j > 0) {
        const Term& ta = a.terms[--i];
        const Term& tb = b.terms[--j];
        int c = mono_cmp(ta.mono, tb.mono);
        if (c != 0) return c < 0;
        int cc = cmp(ta.coeff, tb.coeff);
        if (cc != 0) return cc < 0;
    }
    return i == 0 && j > 0;
}

std::string Poly::to_string(const VarTable& vt) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        mpq_class c = t.coeff;
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            if (sgn(c) < 0) {
                os << " - ";
                c = -c;
            } else {
                os << " + ";
            }
        }
        bool need_coeff = (cmp(c, mpq_class(1)) != 0) || t.mono.empty();
        if (need_coeff) os << c.get_str();
        bool lead = !need_coeff;
        size_t k = 0;
        while (k < t.mono.size()) {
            size_t e = 1;
            while (k + e < t.mono.size() && t.mono[k + e] == t.mono[k]) ++e;
            os << (lead ? "" : "*") << vt.name(t.mono[k]);
            if (e > 1) os << "^" << e;
            lead = false;
            k += e;
        }
    }
    return os.str();
}

// --- LinearSpan --------------------------------------------------------------

Poly LinearSpan::reduce(Poly p) const {
    while (!p.is_zero()) {
        // scan terms from the highest down for a reducible monomial
        bool hit = false;
        for (size_t i = p.terms.size(); i > 0; --i) {
            const Term& t = p.terms[i - 1];
            auto it = rows_.find(t.mono);
            if (it != rows_.end()) {
                p -= it->second.scaled(t.coeff);
                hit = true;
                break;
            }
        }
        if (!hit) break;
    }
    return p;
}

bool LinearSpan::insert(Poly p) {
    p = reduce(std::move(p));
    if (p.is_zero()) return false;
    p = p.scaled(1 / p.leading().coeff);  // monic
    // back-substitute into existing rows to keep the basis fully reduced
    const Mono lead = p.leading().mono;
    for (auto& [lm, row] : rows_) {
        for (const auto& t : row.terms) {
            if (mono_cmp(t.mono, lead) == 0) {
                row -= p.scaled(t.coeff);
                break;
            }
        }
    }
    rows_.emplace(lead, std::move(p));
    return true;
}

std::vector<Poly> LinearSpan::basis() const {
    std::vector<Poly> out;
    for (const auto& [lm, row] : rows_) out.push_back(row);
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

// --- JSON --------------------------------------------------------------------

nlohmann::json poly_to_json(const VarTable& vt, const Poly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms) {
        nlohmann::json term;
        if (t.coeff.get_den() == 1 && t.coeff.get_num().fits_slong_p()) {
            term["coeff"] = t.coeff.get_num().get_si();
        } else {
            term["coeff"] = t.coeff.get_str();
        }
        nlohmann::json mono = nlohmann::json::array();
        for (int v : t.mono) {
            auto in = vt.info(v);
            mono.push_back(nlohmann::json::array());
            auto& entry = mono.back();
            entry.push_back(vt.arrow_id(in.arrow));
            entry.push_back(in.row + 1);
            entry.push_back(in.col + 1);
        }
        term["monomial"] = mono;
        terms.push_back(term);
    }
    return nlohmann::json{{"terms", terms}};
}

Poly poly_from_json(const VarTable& vt, const nlohmann::json& j) {
    require(j.is_object() && j.contains("terms") && j["terms"].is_array(),
            "polynomial document needs a \"terms\" array");
    std::vector<Term> ts;
    for (const auto& termj : j["terms"]) {
        require(termj.is_object() && termj.contains("coeff") && termj.contains("monomial"),
                "polynomial term needs \"coeff\" and \"monomial\"");
        Term t;
        const auto& cj = termj["coeff"];
        if (cj.is_number_integer()) {
            t.coeff = mpq_class((long)cj.get<long long>());
        } else {
            require(cj.is_string(), "coefficient must be an integer or an \"n/d\" string");
            try {
                t.coeff = mpq_class(cj.get<std::string>());
            } catch (const std::invalid_argument&) {
                fail("bad rational literal \"" + cj.get<std::string>() + "\"");
            }
            t.coeff.canonicalize();
        }
        require(termj["monomial"].is_array(), "\"monomial\" must be an array");
        for (const auto& vj : termj["monomial"]) {
            require(vj.is_array() && vj.size() == 3 && vj[0].is_string() &&
                        vj[1].is_number_integer() && vj[2].is_number_integer(),
                    "monomial entries are [arrow_id, row, col] triples");
            int arrow = vt.arrow_index(vj[0].get<std::string>());
            t.mono.push_back(vt.index(arrow, vj[1].get<int>() - 1, vj[2].get<int>() - 1));
        }
        std::sort(t.mono.begin(), t.mono.end());
        ts.push_back(std::move(t));
    }
    normalize(ts);
    Poly p;
    p.terms = std::move(ts);
    return p;
}

nlohmann::json poly_list_to_json(const VarTable& vt, const std::vector<Poly>& ps) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : ps) arr.push_back(poly_to_json(vt, p));
    return arr;
}

std::vector<Poly> poly_list_from_json(const VarTable& vt, const nlohmann::json& j) {
    require(j.is_array(), "polynomial list must be a JSON array");
    std::vector<Poly> out;
    for (const auto& pj : j) out.push_back(poly_from_json(vt, pj));
    return out;
}

}  // namespace qrv
