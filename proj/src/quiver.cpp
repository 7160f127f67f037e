#include "qrv/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace qrv {

void Quiver::finalize() {
    in_arrows.assign(vertices.size(), {});
    out_arrows.assign(vertices.size(), {});
    for (int a = 0; a < num_arrows(); ++a) {
        require(arrows[a].tail >= 0 && arrows[a].tail < num_vertices() && arrows[a].head >= 0 &&
                    arrows[a].head < num_vertices(),
                "arrow endpoint out of range");
        out_arrows[arrows[a].tail].push_back(a);
        in_arrows[arrows[a].head].push_back(a);
    }
}

int Quiver::vertex_index(const std::string& name) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertices[i] == name) return i;
    fail("unknown vertex \"" + name + "\"");
}

int Quiver::arrow_index(const std::string& id) const {
    for (int i = 0; i < num_arrows(); ++i)
        if (arrows[i].id == id) return i;
    fail("unknown arrow \"" + id + "\"");
}

int Quiver::loop_count(int x) const {
    int n = 0;
    for (int a : out_arrows[x])
        if (arrows[a].head == x) ++n;
    return n;
}

bool Algebra::two_path_in_ideal(int a, int b) const {
    require(q.arrows[a].head == q.arrows[b].tail, "two_path_in_ideal: path not composable");
    if (rad_square_zero) return true;
    for (const auto& rel : relations)
        if (rel.size() == 2 && rel[0] == a && rel[1] == b) return true;
    return false;
}

std::vector<std::vector<int>> Algebra::effective_relations() const {
    std::vector<std::vector<int>> out;
    std::set<std::pair<int, int>> seen;
    if (rad_square_zero) {
        for (int a = 0; a < q.num_arrows(); ++a)
            for (int b = 0; b < q.num_arrows(); ++b)
                if (q.arrows[a].head == q.arrows[b].tail) {
                    out.push_back({a, b});
                    seen.insert({a, b});
                }
    }
    for (const auto& rel : relations) {
        if (rel.size() == 2 && seen.count({rel[0], rel[1]})) continue;
        out.push_back(rel);
    }
    return out;
}

bool Algebra::is_rad_square_zero() const {
    if (rad_square_zero) return true;
    for (int a = 0; a < q.num_arrows(); ++a)
        for (int b = 0; b < q.num_arrows(); ++b)
            if (q.arrows[a].head == q.arrows[b].tail && !two_path_in_ideal(a, b)) return false;
    return true;
}

// --- JSON ------------------------------------------------------------------

namespace {

void check_keys(const nlohmann::json& obj, const std::set<std::string>& allowed,
                const std::string& what) {
    require(obj.is_object(), what + " must be a JSON object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        require(allowed.count(it.key()) > 0, what + ": unknown key \"" + it.key() + "\"");
}

}  // namespace

Algebra parse_algebra(const nlohmann::json& doc) {
    check_keys(doc, {"vertices", "arrows", "relations", "radical_square_zero"}, "quiver document");
    require(doc.contains("vertices"), "quiver document: missing \"vertices\"");
    require(doc.contains("arrows"), "quiver document: missing \"arrows\"");

    Algebra A;
    require(doc["vertices"].is_array(), "\"vertices\" must be an array");
    std::unordered_set<std::string> vseen;
    for (const auto& v : doc["vertices"]) {
        require(v.is_string(), "vertex ids must be strings");
        std::string name = v.get<std::string>();
        require(!name.empty(), "empty vertex id");
        require(vseen.insert(name).second, "duplicate vertex id \"" + name + "\"");
        A.q.vertices.push_back(name);
    }

    require(doc["arrows"].is_array(), "\"arrows\" must be an array");
    std::unordered_set<std::string> aseen;
    for (const auto& aj : doc["arrows"]) {
        check_keys(aj, {"id", "tail", "head"}, "arrow");
        require(aj.contains("id") && aj.contains("tail") && aj.contains("head"),
                "arrow: need id, tail, head");
        require(aj["id"].is_string() && aj["tail"].is_string() && aj["head"].is_string(),
                "arrow fields must be strings");
        Arrow a;
        a.id = aj["id"].get<std::string>();
        require(!a.id.empty(), "empty arrow id");
        require(aseen.insert(a.id).second, "duplicate arrow id \"" + a.id + "\"");
        a.tail = A.q.vertex_index(aj["tail"].get<std::string>());
        a.head = A.q.vertex_index(aj["head"].get<std::string>());
        A.q.arrows.push_back(a);
    }
    A.q.finalize();

    if (doc.contains("relations")) {
        require(doc["relations"].is_array(), "\"relations\" must be an array");
        for (const auto& rj : doc["relations"]) {
            require(rj.is_array(), "each relation must be an array of arrow ids");
            std::vector<int> path;
            for (const auto& idj : rj) {
                require(idj.is_string(), "relation entries must be arrow ids");
                path.push_back(A.q.arrow_index(idj.get<std::string>()));
            }
            require(path.size() >= 2, "relation shorter than two arrows");
            for (size_t i = 0; i + 1 < path.size(); ++i)
                require(A.q.arrows[path[i]].head == A.q.arrows[path[i + 1]].tail,
                        "relation path not composable");
            A.relations.push_back(std::move(path));
        }
    }
    if (doc.contains("radical_square_zero")) {
        require(doc["radical_square_zero"].is_boolean(), "\"radical_square_zero\" must be a bool");
        A.rad_square_zero = doc["radical_square_zero"].get<bool>();
    }
    return A;
}

Algebra parse_algebra_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
    return parse_algebra(doc);
}

nlohmann::json algebra_to_json(const Algebra& A) {
    nlohmann::json doc;
    doc["vertices"] = A.q.vertices;
    doc["arrows"] = nlohmann::json::array();
    for (const auto& a : A.q.arrows) {
        doc["arrows"].push_back({{"id", a.id},
                                 {"tail", A.q.vertices[a.tail]},
                                 {"head", A.q.vertices[a.head]}});
    }
    doc["relations"] = nlohmann::json::array();
    for (const auto& rel : A.relations) {
        nlohmann::json path = nlohmann::json::array();
        for (int a : rel) path.push_back(A.q.arrows[a].id);
        doc["relations"].push_back(path);
    }
    doc["radical_square_zero"] = A.rad_square_zero;
    return doc;
}

nlohmann::json dimvec_to_json(const Quiver& q, const DimVec& d) {
    nlohmann::json j = nlohmann::json::object();
    for (int i = 0; i < q.num_vertices(); ++i) j[q.vertices[i]] = d[i];
    return j;
}

DimVec dimvec_from_json(const Quiver& q, const nlohmann::json& j, bool allow_negative) {
    require(j.is_object(), "dimension vector must be a JSON object");
    DimVec d(q.num_vertices(), 0);
    std::vector<bool> seen(q.num_vertices(), false);
    for (auto it = j.begin(); it != j.end(); ++it) {
        int x = q.vertex_index(it.key());
        require(!seen[x], "dimension vector lists \"" + it.key() + "\" twice");
        require(it.value().is_number_integer(), "dimension vector entries must be integers");
        long long v = it.value().get<long long>();
        require(allow_negative || v >= 0, "negative entry at vertex \"" + it.key() + "\"");
        d[x] = (int)v;
        seen[x] = true;
    }
    for (int i = 0; i < q.num_vertices(); ++i)
        require(seen[i], "dimension vector missing vertex \"" + q.vertices[i] + "\"");
    return d;
}

DimVec parse_vertex_map(const Quiver& q, const std::string& text, bool allow_negative) {
    DimVec d(q.num_vertices(), 0);
    std::vector<bool> seen(q.num_vertices(), false);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        require(colon != std::string::npos, "bad entry \"" + item + "\" (expected vertex:number)");
        std::string name = item.substr(0, colon);
        std::string num = item.substr(colon + 1);
        int x = q.vertex_index(name);
        require(!seen[x], "vertex \"" + name + "\" listed twice");
        try {
            size_t used = 0;
            long long v = std::stoll(num, &used);
            require(used == num.size(), "bad number \"" + num + "\"");
            require(allow_negative || v >= 0, "negative entry at vertex \"" + name + "\"");
            d[x] = (int)v;
        } catch (const std::invalid_argument&) {
            fail("bad number \"" + num + "\"");
        } catch (const std::out_of_range&) {
            fail("number out of range \"" + num + "\"");
        }
        seen[x] = true;
    }
    for (int i = 0; i < q.num_vertices(); ++i)
        require(seen[i], "missing vertex \"" + q.vertices[i] + "\"");
    return d;
}

void validate_dimvec(const Quiver& q, const DimVec& d) {
    require((int)d.size() == q.num_vertices(), "dimension vector domain mismatch");
    for (int v : d) require(v >= 0, "dimension vector has a negative entry");
}

void validate_rank_range(const DimVec& d, const DimVec& r) {
    require(d.size() == r.size(), "rank sequence domain mismatch");
    for (size_t i = 0; i < d.size(); ++i)
        require(r[i] >= 0 && r[i] <= d[i], "rank sequence outside [0, d]");
}

// --- node splitting --------------------------------------------------------

bool is_node(const Algebra& A, int x) {
    require(x >= 0 && x < A.q.num_vertices(), "vertex index out of range");
    if (A.rad_square_zero) return true;
    for (int a : A.q.in_arrows[x])
        for (int b : A.q.out_arrows[x])
            if (!A.two_path_in_ideal(a, b)) return false;
    return true;
}

namespace {

std::string fresh_name(const std::string& base, std::set<std::string>& used) {
    std::string name = base;
    int k = 2;
    while (!used.insert(name).second) name = base + std::to_string(k++);
    return name;
}

// True when vertex x occurs strictly inside the relation path.
bool path_passes_through(const Quiver& q, const std::vector<int>& path, int x) {
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (q.arrows[path[i]].head == x) return true;
    return false;
}

}  // namespace

SplitResult split_node(const Algebra& A, int x) {
    require(is_node(A, x), "vertex \"" + A.q.vertices[x] + "\" is not a node");

    SplitResult res;
    Algebra& B = res.algebra;
    std::set<std::string> used(A.q.vertices.begin(), A.q.vertices.end());
    used.erase(A.q.vertices[x]);
    std::string tail_name = fresh_name(A.q.vertices[x] + "_t", used);
    std::string head_name = fresh_name(A.q.vertices[x] + "_h", used);

    std::vector<int> remap(A.q.num_vertices(), -1);
    for (int v = 0; v < A.q.num_vertices(); ++v) {
        if (v == x) {
            res.x_t = B.q.num_vertices();
            B.q.vertices.push_back(tail_name);
            res.x_h = B.q.num_vertices();
            B.q.vertices.push_back(head_name);
        } else {
            remap[v] = B.q.num_vertices();
            B.q.vertices.push_back(A.q.vertices[v]);
        }
    }
    for (const auto& a : A.q.arrows) {
        Arrow b = a;
        b.tail = (a.tail == x) ? res.x_t : remap[a.tail];
        b.head = (a.head == x) ? res.x_h : remap[a.head];
        B.q.arrows.push_back(b);
    }
    B.q.finalize();
    for (const auto& rel : A.relations)
        if (!path_passes_through(A.q, rel, x)) B.relations.push_back(rel);
    B.rad_square_zero = A.rad_square_zero;
    return res;
}

FullSplitResult split_all_nodes(const Algebra& A) {
    for (int x = 0; x < A.q.num_vertices(); ++x)
        require(is_node(A, x),
                "vertex \"" + A.q.vertices[x] + "\" is not a node; cannot split all vertices");

    FullSplitResult res;
    Algebra& B = res.algebra;
    res.tail_part.resize(A.q.num_vertices());
    res.head_part.resize(A.q.num_vertices());
    std::set<std::string> used;
    for (int v = 0; v < A.q.num_vertices(); ++v) {
        res.tail_part[v] = B.q.num_vertices();
        B.q.vertices.push_back(fresh_name(A.q.vertices[v] + "_t", used));
        res.head_part[v] = B.q.num_vertices();
        B.q.vertices.push_back(fresh_name(A.q.vertices[v] + "_h", used));
    }
    for (const auto& a : A.q.arrows) {
        Arrow b = a;
        b.tail = res.tail_part[a.tail];
        b.head = res.head_part[a.head];
        B.q.arrows.push_back(b);
    }
    B.q.finalize();
    B.rad_square_zero = false;  // no composable pairs remain
    return res;
}

DimVec split_dimvec(const Algebra& A, int x, const DimVec& d, int r) {
    validate_dimvec(A.q, d);
    require(x >= 0 && x < A.q.num_vertices(), "vertex index out of range");
    require(r >= 0 && r <= d[x], "rank outside [0, d(x)]");
    DimVec out;
    for (int v = 0; v < A.q.num_vertices(); ++v) {
        if (v == x) {
            out.push_back(d[x] - r);  // x_t
            out.push_back(r);         // x_h
        } else {
            out.push_back(d[v]);
        }
    }
    return out;
}

DimVec split_all_dimvec(const Algebra& A, const DimVec& d, const DimVec& r) {
    validate_dimvec(A.q, d);
    validate_rank_range(d, r);
    DimVec out;
    for (int v = 0; v < A.q.num_vertices(); ++v) {
        out.push_back(d[v] - r[v]);  // source copy
        out.push_back(r[v]);         // sink copy
    }
    return out;
}

}  // namespace qrv
