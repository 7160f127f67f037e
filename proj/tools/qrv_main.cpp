#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrv/components.hpp"
#include "qrv/ideals.hpp"
#include "qrv/moduli.hpp"
#include "qrv/quiver.hpp"
#include "qrv/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using nlohmann::json;

namespace {

qrv::Algebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    qrv::require(in.good(), "cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        qrv::fail(path + ": " + e.what());
    }
    return qrv::parse_algebra(doc);
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    qrv::require(in.good(), "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        qrv::fail(path + ": " + e.what());
    }
}

// the whole run reports through one envelope; exit code mirrors status
int emit(bool ok, const json& payload, const std::vector<std::string>& diagnostics) {
    json out;
    out["status"] = ok ? "ok" : "error";
    out["payload"] = payload;
    out["diagnostics"] = diagnostics;
    std::cout << out.dump(2) << "\n";
    for (const auto& d : diagnostics) std::cerr << d << "\n";
    return ok ? 0 : 1;
}

struct VerifyOpts {
    std::string file, rank_text, suite, generators_file, theta_text;
    std::string vertex;
    std::string dim_text;
    int trials = 100;
    uint64_t prime = 32003;
    int q = 2;
};

json rankseq_json(const qrv::Quiver& qv, const qrv::RankSeq& r) {
    json o;
    for (int v = 0; v < qv.num_vertices(); ++v) o[qv.vertices[v]] = r[v];
    return o;
}

json run_verify(const VerifyOpts& o, uint64_t seed) {
    qrv::Algebra A = load_algebra(o.file);
    qrv::DimVec d = qrv::parse_vertex_map(A.q, o.dim_text);
    qrv::validate_dimvec(A.q, d);
    qrv::SampleConfig cfg;
    cfg.seed = seed;
    cfg.trials = o.trials;
    cfg.prime = o.prime;

    json p;
    p["suite"] = o.suite;
    p["seed"] = seed;
    p["prime"] = o.prime;

    if (o.suite == "membership") {
        qrv::RankSeq r = qrv::parse_vertex_map(A.q, o.rank_text);
        qrv::GeneratorSet gs = qrv::generators_for_component(A, d, r);
        std::vector<qrv::Poly> polys;
        if (!o.generators_file.empty()) {
            polys = qrv::poly_list_from_json(gs.vt, load_json(o.generators_file));
        } else {
            for (const auto& g : gs.gens) polys.push_back(g.p);
        }
        qrv::Fp f(cfg.prime);
        json failures = json::array();
        for (int t = 0; t < cfg.trials; ++t) {
            auto rep = qrv::sample_component_point(f, A, d, r, qrv::derive_seed(seed, 1, t),
                                                   cfg.retry_budget);
            auto pt = qrv::point_from_rep(f, gs.vt, A.q, rep);
            for (size_t g = 0; g < polys.size(); ++g)
                if (!f.is_zero(polys[g].evaluate(f, pt)))
                    failures.push_back({{"trial", t}, {"generator", (int)g}});
        }
        p["trials"] = cfg.trials;
        p["generator_count"] = (int)polys.size();
        p["failures"] = failures;
        p["verdict"] = failures.empty();
    } else if (o.suite == "codim") {
        qrv::RankSeq r = qrv::parse_vertex_map(A.q, o.rank_text);
        auto rep = qrv::codim_check(A, d, r, cfg.trials, cfg);
        p["points"] = rep.points;
        p["ambient"] = rep.ambient;
        p["expected_dimension"] = rep.expected_dimension;
        p["resampled_points"] = rep.resampled_points;
        if (!rep.ok) {
            p["failed_point"] = rep.failed_point;
            p["failed_dimension"] = rep.failed_dimension;
        }
        p["verdict"] = rep.ok;
    } else if (o.suite == "containment") {
        auto rep = qrv::maximality_by_containment(A, d, cfg);
        p["trials"] = cfg.trials;
        p["per_eval_error_bound"] = rep.per_eval_error_bound;
        p["nonempty"] = qrv::rankseq_list_to_json(A.q, rep.nonempty);
        p["maximal"] = qrv::rankseq_list_to_json(A.q, rep.maximal);
        p["predicted_components"] = qrv::rankseq_list_to_json(A.q, rep.predicted_components);
        p["verdict"] = rep.agree;
    } else if (o.suite == "oracle") {
        auto rep = qrv::achievable_rank_oracle(A, d, o.q);
        p["q"] = o.q;
        p["reps_checked"] = rep.reps_checked;
        p["achieved"] = qrv::rankseq_list_to_json(A.q, rep.achieved);
        p["predicted"] = qrv::rankseq_list_to_json(A.q, rep.predicted);
        p["achieved_not_predicted"] = qrv::rankseq_list_to_json(A.q, rep.achieved_not_predicted);
        p["predicted_not_achieved"] = qrv::rankseq_list_to_json(A.q, rep.predicted_not_achieved);
        p["verdict"] = rep.agree;
    } else if (o.suite == "endo") {
        qrv::require(!o.vertex.empty(), "endo suite needs --vertex");
        qrv::RankSeq r = qrv::parse_vertex_map(A.q, o.rank_text);
        int x = A.q.vertex_index(o.vertex);
        auto rep = qrv::endo_additivity_check(A, x, d, r[x], cfg.trials, cfg);
        p["trials"] = rep.trials;
        p["vertex"] = o.vertex;
        p["rank"] = r[x];
        if (!rep.ok) {
            p["failed_trial"] = rep.failed_trial;
            p["lhs"] = rep.lhs;
            p["rhs"] = rep.rhs;
        }
        p["verdict"] = rep.ok;
    } else if (o.suite == "semistable") {
        qrv::require(!o.theta_text.empty(), "semistable suite needs --theta");
        qrv::Weight theta = qrv::parse_vertex_map(A.q, o.theta_text, true);
        auto rep = qrv::moduli_consistency_check(A, d, theta, o.q);
        p["q"] = o.q;
        p["points"] = rep.points;
        p["semistable_points"] = rep.semistable_points;
        if (!rep.ok) p["failure"] = rep.failure;
        p["verdict"] = rep.ok;
    } else {
        qrv::fail("unknown verify suite: " + o.suite);
    }
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"node splitting toolkit for quiver representation varieties"};
    app.require_subcommand(1);
    app.fallthrough();

    uint64_t seed = 0;
    bool seed_given = false;
    int jobs = 0;
    app.add_option("--seed", seed, "random seed (default 0, env QRV_SEED)")
        ->each([&](const std::string&) { seed_given = true; });
    app.add_option("--jobs", jobs, "worker threads for parallel kernels");

    std::string file, vertex, dim_text, rank_text, format_text = "plain";
    std::string extra_file, theta_text;
    int split_rank = -1;
    bool split_rank_given = false;
    VerifyOpts vo;

    auto* c_nodes = app.add_subcommand("nodes", "list vertices with node status");
    c_nodes->add_option("file", file, "algebra JSON file")->required();

    auto* c_split = app.add_subcommand("split", "split the algebra at a node");
    c_split->add_option("file", file)->required();
    c_split->add_option("--vertex", vertex, "node to split")->required();
    c_split->add_option("--dim", dim_text, "dimension vector v1:n1,v2:n2,...");
    c_split->add_option("--rank", split_rank, "rank at the split vertex")
        ->each([&](const std::string&) { split_rank_given = true; });

    auto* c_comp = app.add_subcommand("components", "classify irreducible components");
    c_comp->add_option("file", file)->required();
    c_comp->add_option("--dim", dim_text)->required();

    auto* c_ideal = app.add_subcommand("ideal", "emit ideal generators for a rank stratum");
    c_ideal->add_option("file", file)->required();
    c_ideal->add_option("--dim", dim_text)->required();
    c_ideal->add_option("--rank", rank_text, "rank sequence v1:r1,v2:r2,...")->required();
    c_ideal->add_option("--format", format_text, "plain|macaulay2|singular|json");
    c_ideal->add_option("--extra", extra_file, "split-side family to saturate (relative mode)");
    c_ideal->add_option("--vertex", vertex, "node for relative mode");

    auto* c_verify = app.add_subcommand("verify", "numerical verification suites");
    c_verify->add_option("file", vo.file)->required();
    c_verify->add_option("--dim", vo.dim_text)->required();
    c_verify->add_option("--rank", vo.rank_text, "rank sequence v1:r1,...");
    c_verify->add_option("--trials", vo.trials, "sample count (default 100)");
    c_verify->add_option("--prime", vo.prime, "evaluation prime (default 32003)");
    c_verify
        ->add_option("--suite", vo.suite,
                     "membership|codim|containment|oracle|endo|semistable")
        ->required();
    c_verify->add_option("--generators", vo.generators_file,
                         "membership: evaluate this generator file instead");
    c_verify->add_option("--q", vo.q, "field size for oracle/semistable (default 2)");
    c_verify->add_option("--vertex", vo.vertex, "vertex for the endo suite");
    c_verify->add_option("--theta", vo.theta_text, "weight v1:w1,... for the semistable suite");

    auto* c_reduce = app.add_subcommand("reduce", "delete arrows/vertices by weight sign");
    c_reduce->add_option("file", file)->required();
    c_reduce->add_option("--theta", theta_text, "weight v1:w1,v2:w2,...")->required();

    CLI11_PARSE(app, argc, argv);

    if (!seed_given) {
        if (const char* env = std::getenv("QRV_SEED")) seed = std::strtoull(env, nullptr, 10);
    }
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#else
    (void)jobs;
#endif

    try {
        json p;
        if (c_nodes->parsed()) {
            qrv::Algebra A = load_algebra(file);
            json verts = json::array();
            for (int v = 0; v < A.q.num_vertices(); ++v)
                verts.push_back({{"name", A.q.vertices[v]}, {"node", qrv::is_node(A, v)}});
            p["vertices"] = verts;
            p["rad_square_zero"] = A.is_rad_square_zero();
        } else if (c_split->parsed()) {
            qrv::Algebra A = load_algebra(file);
            int x = A.q.vertex_index(vertex);
            qrv::SplitResult sr = qrv::split_node(A, x);
            p["algebra"] = qrv::algebra_to_json(sr.algebra);
            p["x_t"] = sr.algebra.q.vertices[sr.x_t];
            p["x_h"] = sr.algebra.q.vertices[sr.x_h];
            if (!dim_text.empty()) {
                qrv::require(split_rank_given, "--dim needs --rank");
                qrv::DimVec d = qrv::parse_vertex_map(A.q, dim_text);
                qrv::validate_dimvec(A.q, d);
                qrv::require(split_rank >= 0 && split_rank <= d[x], "rank out of range");
                qrv::DimVec e = qrv::split_dimvec(A, x, d, split_rank);
                p["dims"] = qrv::dimvec_to_json(sr.algebra.q, e);
            }
        } else if (c_comp->parsed()) {
            qrv::Algebra A = load_algebra(file);
            qrv::DimVec d = qrv::parse_vertex_map(A.q, dim_text);
            qrv::validate_dimvec(A.q, d);
            json comps = json::array();
            for (const auto& rec : qrv::enumerate_components(A, d))
                comps.push_back(qrv::component_record_to_json(A.q, rec));
            p["dimension_vector"] = qrv::dimvec_to_json(A.q, d);
            p["components"] = comps;
        } else if (c_ideal->parsed()) {
            qrv::Algebra A = load_algebra(file);
            qrv::DimVec d = qrv::parse_vertex_map(A.q, dim_text);
            qrv::validate_dimvec(A.q, d);
            qrv::RankSeq r = qrv::parse_vertex_map(A.q, rank_text);
            qrv::GeneratorSet gs = [&] {
                if (extra_file.empty()) return qrv::generators_for_component(A, d, r);
                qrv::require(!vertex.empty(), "--extra needs --vertex");
                int x = A.q.vertex_index(vertex);
                qrv::SplitResult sr = qrv::split_node(A, x);
                qrv::DimVec e = qrv::split_dimvec(A, x, d, r[x]);
                qrv::VarTable svt(sr.algebra.q, e);
                auto P = qrv::poly_list_from_json(svt, load_json(extra_file));
                return qrv::generators_relative(A, x, d, r[x], P);
            }();
            p["count"] = (int)gs.gens.size();
            json fams = json::array();
            for (const auto& g : gs.gens) fams.push_back(qrv::family_name(g.family));
            p["families"] = fams;
            if (format_text == "json") {
                std::vector<qrv::Poly> polys;
                for (const auto& g : gs.gens) polys.push_back(g.p);
                p["generators"] = qrv::poly_list_to_json(gs.vt, polys);
            } else {
                p["format"] = format_text;
                p["text"] = qrv::export_generators(gs, qrv::parse_export_format(format_text));
            }
        } else if (c_verify->parsed()) {
            p = run_verify(vo, seed);
            bool verdict = p["verdict"].get<bool>();
            if (!verdict)
                return emit(false, p, {"verification suite " + vo.suite + " failed"});
        } else if (c_reduce->parsed()) {
            qrv::Algebra A = load_algebra(file);
            qrv::Weight theta = qrv::parse_vertex_map(A.q, theta_text, true);
            qrv::ReducedAlgebra red = qrv::reduce_by_weight(A, theta);
            p["algebra"] = qrv::algebra_to_json(red.algebra);
            json kept_v = json::array(), del_v = json::array();
            for (int v = 0; v < A.q.num_vertices(); ++v)
                (red.vertex_deleted[v] ? del_v : kept_v).push_back(A.q.vertices[v]);
            json kept_a = json::array(), del_a = json::array();
            for (int a = 0; a < A.q.num_arrows(); ++a)
                (red.arrow_deleted[a] ? del_a : kept_a).push_back(A.q.arrows[a].id);
            p["kept_vertices"] = kept_v;
            p["deleted_vertices"] = del_v;
            p["kept_arrows"] = kept_a;
            p["deleted_arrows"] = del_a;
        }
        return emit(true, p, {});
    } catch (const std::exception& e) {
        return emit(false, json::object(), {e.what()});
    }
}
