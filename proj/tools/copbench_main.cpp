// copbench command-line front end: graph construction, structural
// metrics, bound certificates, exact cop numbers, strategy simulation,
// blocking-set machinery, profile counting and family sweeps.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "copbench/certify.hpp"
#include "copbench/constructions.hpp"
#include "copbench/counting.hpp"
#include "copbench/cover.hpp"
#include "copbench/errors.hpp"
#include "copbench/game.hpp"
#include "copbench/generators.hpp"
#include "copbench/graph.hpp"
#include "copbench/hypergraph.hpp"
#include "copbench/isomorphism.hpp"
#include "copbench/metrics.hpp"
#include "copbench/strategies.hpp"
#include "copbench/sweep.hpp"

using namespace copbench;
using nlohmann::json;

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
}

void write_json(const json& j, const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) fail(Err::FormatError, "cannot write " + path);
    out << j.dump(2) << '\n';
}

void write_labels(const std::vector<std::string>& labels, const std::string& path) {
    if (path.empty()) return;
    write_json(json(labels), path);
}

json metrics_json(const Graph& g, bool with_census) {
    Metrics m = metrics(g);
    json j;
    j["n"] = g.order();
    j["m"] = g.edge_count();
    j["min_degree"] = m.min_degree;
    j["max_degree"] = m.max_degree;
    j["connected"] = m.connected;
    j["girth"] = m.girth ? json(*m.girth) : json();
    j["diameter"] = m.diameter ? json(*m.diameter) : json();
    json hist = json::object();
    for (auto [d, c] : m.degree_histogram) hist[std::to_string(d)] = c;
    j["degree_histogram"] = hist;
    if (with_census) {
        CycleCensus cc = cycle_census(g);
        j["cycle_census"] = {{"c3", cc.c3}, {"c4", cc.c4}, {"c6", cc.c6}};
    }
    return j;
}

struct ConstructArgs {
    std::string kind;
    int q = 3, m = 3, n = 6;
    std::uint64_t seed = 1;
    double eps = 0.5;
    int r = 1, i = 1, t_prime = 0, max_count = 10;
    std::string offsets = "1";
    std::string entries, choice, mode = "girth5";
    std::string in, with_file, out, labels;
};

int run_construct(const ConstructArgs& a) {
    Graph g;
    std::vector<std::string> labels;
    if (a.kind == "incidence") {
        ProjectivePlane pl = projective_plane(a.q);
        g = incidence_graph(pl);
        labels = incidence_labels(pl);
    } else if (a.kind == "polarity") {
        g = polarity_graph(a.q);
        labels = polarity_labels(a.q);
    } else if (a.kind == "bf") {
        g = bf_graph(a.q, a.m, a.seed);
        labels = bf_labels(a.q, a.m);
    } else if (a.kind == "cycle") {
        g = cycle_graph(a.n);
    } else if (a.kind == "path") {
        g = path_graph(a.n);
    } else if (a.kind == "complete") {
        g = complete_graph(a.n);
    } else if (a.kind == "star") {
        g = star_graph(a.n);
    } else if (a.kind == "petersen") {
        g = petersen_graph();
    } else if (a.kind == "circulant") {
        g = circulant_graph(a.n, parse_int_list(a.offsets));
    } else if (a.kind == "double-cover") {
        Graph base = load_edge_list_file(a.in);
        g = double_cover(base);
        labels = double_cover_labels(base);
    } else if (a.kind == "lex") {
        Graph left = load_edge_list_file(a.in);
        Graph right = load_edge_list_file(a.with_file);
        g = lex_product(left, right);
        labels = lex_labels(left, right);
    } else if (a.kind == "strip") {
        Graph host = load_edge_list_file(a.in);
        FactorDecomposition fd = factorize(host, a.r);
        g = strip_factors(host, fd, a.i, a.eps);
    } else if (a.kind == "deletion") {
        Graph host = load_edge_list_file(a.in);
        DeletionVector dv = make_deletion_vector(host, a.eps, parse_int_list(a.entries));
        g = neighborhood_deletion(host, dv);
    } else if (a.kind == "triangle-trim") {
        Graph host = load_edge_list_file(a.in);
        int t = static_cast<int>(triangle_list(host).size());
        std::vector<int> choice = a.choice.empty()
                                      ? std::vector<int>(std::max(0, t - a.t_prime), 0)
                                      : parse_int_list(a.choice);
        g = triangle_trim(host, a.t_prime, choice);
    } else if (a.kind == "spanning-family") {
        Graph host = load_edge_list_file(a.in);
        SpanMode mode = a.mode == "c4free" ? SpanMode::C4Free : SpanMode::Girth5;
        auto family = spanning_profile_family(host, a.eps, mode, a.max_count);
        for (std::size_t i = 0; i < family.size(); ++i) {
            std::string path = a.out + "_" + std::to_string(i) + ".txt";
            save_edge_list_file(family[i], path);
        }
        std::cout << json{{"members", family.size()}, {"prefix", a.out}}.dump() << '\n';
        return 0;
    } else {
        fail(Err::FormatError, "unknown construct kind " + a.kind);
    }
    save_edge_list_file(g, a.out);
    write_labels(labels, a.labels);
    std::cout << json{{"n", g.order()}, {"m", g.edge_count()}, {"out", a.out}}.dump() << '\n';
    return 0;
}

std::shared_ptr<CopController> make_cop_controller(const std::string& name, int k,
                                                   const Graph& g, const std::string& base_path,
                                                   std::uint64_t budget) {
    if (name == "greedy") return greedy_cops(k);
    if (name == "stationary") return stationary_cops(k);
    if (name == "solver") {
        SolveOptions opt;
        opt.budget = budget;
        auto solver = std::make_shared<CopWinSolver>(g, k, opt);
        return solver_cops(solver);
    }
    if (name == "double-solver") {
        if (base_path.empty()) fail(Err::FormatError, "double-solver needs --base");
        Graph base = load_edge_list_file(base_path);
        SolveOptions opt;
        opt.budget = budget;
        auto solver = std::make_shared<CopWinSolver>(base, k, opt);
        std::shared_ptr<CopController> inner(solver_cops(solver));
        return double_cops(base, inner);
    }
    fail(Err::FormatError, "unknown cop strategy " + name);
}

std::shared_ptr<RobberController> make_robber_controller(const std::string& name, int k,
                                                         const Graph& g, int t, int D,
                                                         const std::string& base_path,
                                                         std::uint64_t budget) {
    if (name == "stationary") return stationary_robber();
    if (name == "lowdeg") return evasion_lowdeg(g, t, D);
    if (name == "girth5") return D > 0 ? evasion_girth5(g, D) : evasion_girth5(g);
    if (name == "solver") {
        SolveOptions opt;
        opt.budget = budget;
        auto solver = std::make_shared<CopWinSolver>(g, k, opt);
        return solver_robber(solver);
    }
    if (name == "lift-solver") {
        if (base_path.empty()) fail(Err::FormatError, "lift-solver needs --base");
        Graph base = load_edge_list_file(base_path);
        SolveOptions opt;
        opt.budget = budget;
        auto solver = std::make_shared<CopWinSolver>(base, k, opt);
        std::shared_ptr<RobberController> inner(solver_robber(solver));
        return lift_robber(base, inner);
    }
    fail(Err::FormatError, "unknown robber strategy " + name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial workbench for pursuit-game bounds on graphs"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a graph and write its edge list");
    construct
        ->add_option("kind", ca.kind,
                     "incidence|polarity|bf|cycle|path|complete|star|petersen|circulant|"
                     "double-cover|lex|strip|deletion|triangle-trim|spanning-family")
        ->required();
    construct->add_option("--q", ca.q, "prime power order");
    construct->add_option("--m", ca.m, "cycle length for bf");
    construct->add_option("--n", ca.n, "order for generators");
    construct->add_option("--seed", ca.seed, "split seed for bf");
    construct->add_option("--eps", ca.eps, "epsilon in (0,1)");
    construct->add_option("--r", ca.r, "factor degree (1 or 2)");
    construct->add_option("--i", ca.i, "number of factors to strip");
    construct->add_option("--t-prime", ca.t_prime, "triangles to keep");
    construct->add_option("--max-count", ca.max_count, "family size cap");
    construct->add_option("--offsets", ca.offsets, "circulant offsets, comma separated");
    construct->add_option("--entries", ca.entries, "deletion vector, comma separated");
    construct->add_option("--choice", ca.choice, "triangle edge choices, comma separated");
    construct->add_option("--mode", ca.mode, "girth5|c4free for spanning-family");
    construct->add_option("--in", ca.in, "input graph file");
    construct->add_option("--with", ca.with_file, "second input graph (lex)");
    construct->add_option("--out", ca.out, "output edge-list file (or prefix)")->required();
    construct->add_option("--labels", ca.labels, "write vertex labels as JSON");

    std::string mfile, mout;
    bool mcensus = false;
    auto* met = app.add_subcommand("metrics", "structural metrics of a graph file");
    met->add_option("file", mfile)->required();
    met->add_flag("--census", mcensus, "include the C3/C4/C6 census");
    met->add_option("--out", mout, "also write JSON here");

    std::string cfile, ckind = "k2t", cout_path;
    int ct = 2, cD = -1;
    auto* cert = app.add_subcommand("certify", "emit a lower-bound certificate");
    cert->add_option("file", cfile)->required();
    cert->add_option("--kind", ckind, "k2t|girth5")->required();
    cert->add_option("--t", ct, "t for the K_{2,t} bound");
    cert->add_option("--D", cD, "degree threshold (scan if omitted)");
    cert->add_option("--out", cout_path, "also write JSON here");

    std::string gfile;
    int kmax = 6;
    std::uint64_t budget = SolveOptions{}.budget;
    auto* cn = app.add_subcommand("copnumber", "exact cop number by game solving");
    cn->add_option("file", gfile)->required();
    cn->add_option("--kmax", kmax, "largest cop count to try");
    cn->add_option("--budget", budget, "transition budget");

    std::string sfile, scop = "greedy", srobber = "stationary", strace, sbase;
    int srounds = 100, sk = 1, st = 2, sD = -1;
    std::uint64_t sbudget = SolveOptions{}.budget;
    auto* sim = app.add_subcommand("simulate", "play strategies against each other");
    sim->add_option("file", sfile)->required();
    sim->add_option("--cop", scop, "greedy|stationary|solver|double-solver");
    sim->add_option("--robber", srobber, "stationary|lowdeg|girth5|solver|lift-solver");
    sim->add_option("--rounds", srounds, "horizon");
    sim->add_option("--k", sk, "cop count (for double-solver: per-sheet count)");
    sim->add_option("--t", st, "t for lowdeg");
    sim->add_option("--D", sD, "degree threshold for evaders");
    sim->add_option("--base", sbase, "base graph file for lifted strategies");
    sim->add_option("--trace", strace, "write the trace JSON here");
    sim->add_option("--budget", sbudget, "transition budget for solver strategies");

    std::string vfile, vmode = "domination", vout;
    int vomega = 2;
    auto* cov = app.add_subcommand("cover", "blocking-set and domination machinery");
    cov->add_option("file", vfile)->required();
    cov->add_option("--mode", vmode, "domination|dlc|buckets|blocking")->required();
    cov->add_option("--omega", vomega, "bucket base");
    cov->add_option("--out", vout, "also write JSON here");

    long long qa = 1, qd = 1;
    auto* cnt = app.add_subcommand("count", "profile count with entropy estimate");
    cnt->add_option("--a", qa)->required();
    cnt->add_option("--d", qd)->required();

    std::string wkind = "incidence", wout_dir = ".", wq = "3", wm = "3,4";
    int wqmax = 5, wkmax = 6, wretries = 64;
    std::uint64_t wseed = 1, wexact = 0;
    double weps = 0.5;
    auto* sw = app.add_subcommand("sweep", "family sweep with certificates and CSV report");
    sw->add_option("--kind", wkind, "incidence|bf|strip")->required();
    sw->add_option("--qmax", wqmax, "largest prime power (incidence)");
    sw->add_option("--q", wq, "q values, comma separated (bf/strip)");
    sw->add_option("--m", wm, "m values, comma separated (bf)");
    sw->add_option("--eps", weps, "epsilon (strip)");
    sw->add_option("--seed", wseed, "base split seed (bf)");
    sw->add_option("--retries", wretries, "split seed retries per row (bf)");
    sw->add_option("--exact-budget", wexact, "budget for exact cop numbers (0 = skip)");
    sw->add_option("--kmax", wkmax, "kmax for exact cop numbers");
    sw->add_option("--out-dir", wout_dir, "directory for CSV and member graphs");

    std::string afile;
    auto* aud = app.add_subcommand("family-audit", "audit rows (n,order,bound) from CSV");
    aud->add_option("file", afile)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*construct) return run_construct(ca);

        if (*met) {
            json j = metrics_json(load_edge_list_file(mfile), mcensus);
            std::cout << j.dump(2) << '\n';
            write_json(j, mout);
            return 0;
        }

        if (*cert) {
            Graph g = load_edge_list_file(cfile);
            std::optional<int> D;
            if (cD >= 0) D = cD;
            BoundCertificate c =
                ckind == "girth5" ? girth5_certificate(g, D) : k2t_certificate(g, ct, D);
            json j = certificate_json(c);
            std::cout << j.dump(2) << '\n';
            write_json(j, cout_path);
            return 0;
        }

        if (*cn) {
            Graph g = load_edge_list_file(gfile);
            json j;
            try {
                int c = cop_number(g, kmax, budget);
                j = certificate_json(exact_certificate(g, c));
                j["cop_number"] = c;
            } catch (const Error& e) {
                if (e.kind() != Err::ExceedsKmax) throw;
                j["cop_number"] = nullptr;
                j["exceeds_kmax"] = kmax; // evidence that c(G) > kmax
            }
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (*sim) {
            Graph g = load_edge_list_file(sfile);
            int D = sD > 0 ? sD : metrics(g).min_degree;
            auto cops = make_cop_controller(scop, sk, g, sbase, sbudget);
            // a doubled cop side fields 2k cops on the cover
            int robber_k = scop == "double-solver" ? 2 * sk : sk;
            auto robber = make_robber_controller(srobber, robber_k, g, st, D, sbase, sbudget);
            Trace tr = simulate(g, *cops, *robber, srounds);
            json j = trace_json(tr);
            j["cop_strategy"] = cops->name();
            j["robber_strategy"] = robber->name();
            std::cout << (tr.outcome == Outcome::Captured
                              ? "CAPTURED at round " + std::to_string(tr.capture_round)
                              : "SURVIVED " + std::to_string(srounds) + " rounds")
                      << '\n';
            write_json(j, strace);
            return 0;
        }

        if (*cov) {
            json j;
            if (vmode == "blocking") {
                Hypergraph h = load_hypergraph_file(vfile);
                auto exact = blocking_exact(h);
                auto lp = blocking_lp(h);
                auto greedy = blocking_greedy(h);
                j["tau"] = exact.tau;
                j["tau_star_num"] = numerator(lp.objective).str();
                j["tau_star_den"] = denominator(lp.objective).str();
                j["greedy_size"] = greedy.chosen.size();
                j["within_guarantee"] = greedy.within_guarantee;
                j["witness"] = exact.witness;
                j["greedy_certificate"] = certificate_json(greedy.certificate);
            } else {
                Graph g = load_edge_list_file(vfile);
                if (vmode == "domination") {
                    auto rep = domination_bound(g);
                    j["greedy_size"] = rep.dominating_set.size();
                    j["witness"] = rep.dominating_set;
                    j["total_dominating"] = rep.total_dominating;
                    j["tau_star_num"] = numerator(rep.lp_witness_objective).str();
                    j["tau_star_den"] = denominator(rep.lp_witness_objective).str();
                    j["bound"] = rep.bound_value;
                    j["within_bound"] = rep.within_bound;
                    try { // exact total domination number at desk scale
                        j["tau"] = blocking_exact(open_neighborhood_hypergraph(g)).tau;
                    } catch (const Error&) {
                        j["tau"] = nullptr;
                    }
                } else if (vmode == "buckets") {
                    auto rep = bucket_fractional(g, vomega);
                    j["objective_num"] = numerator(rep.solution.objective).str();
                    j["objective_den"] = denominator(rep.solution.objective).str();
                    j["feasible"] = rep.feasible;
                    j["omega"] = rep.omega;
                    j["bucket_counts"] = rep.bucket_counts;
                } else if (vmode == "dlc") {
                    auto res = dlc_cover_bound(g);
                    j = certificate_json(res.certificate);
                    j["tau"] = res.certificate.params.at("tau");
                    j["greedy_size"] = res.chosen.size();
                    j["chosen"] = res.chosen;
                    auto lp = blocking_lp(res.membership);
                    j["tau_star_num"] = numerator(lp.objective).str();
                    j["tau_star_den"] = denominator(lp.objective).str();
                } else {
                    fail(Err::FormatError, "unknown cover mode " + vmode);
                }
            }
            std::cout << j.dump(2) << '\n';
            write_json(j, vout);
            return 0;
        }

        if (*cnt) {
            CountReport rep = profile_count(qa, qd);
            json j;
            j["a"] = rep.a;
            j["d"] = rep.d;
            j["exact_count"] = rep.exact_count.str();
            j["beta"] = rep.beta;
            j["entropy_estimate"] = rep.entropy_estimate;
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (*sw) {
            SweepOptions opt;
            opt.out_dir = wout_dir;
            opt.exact_budget = wexact;
            opt.kmax = wkmax;
            opt.seed = wseed;
            opt.seed_retries = wretries;
            opt.eps = weps;
            std::filesystem::create_directories(wout_dir);
            SweepOutcome out;
            if (wkind == "incidence") {
                out = sweep_incidence(wqmax, opt);
            } else if (wkind == "bf") {
                auto qs = parse_int_list(wq);
                if (qs.size() != 1) fail(Err::FormatError, "bf sweep takes one q");
                out = sweep_bf(qs[0], parse_int_list(wm), opt);
            } else if (wkind == "strip") {
                out = sweep_strip(parse_int_list(wq), opt);
            } else {
                fail(Err::FormatError, "unknown sweep kind " + wkind);
            }
            std::ofstream csv(wout_dir + "/sweep.csv");
            write_sweep_csv(out, csv);
            write_sweep_csv(out, std::cout);
            if (out.audit.argmin >= 0)
                std::cout << "family_constant," << out.audit.constant << '\n';
            return out.any_failed ? 1 : 0;
        }

        if (*aud) {
            std::ifstream in(afile);
            if (!in) fail(Err::FormatError, "cannot open " + afile);
            std::vector<FamilyAudit::Row> rows;
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#' || line.rfind("n,", 0) == 0) continue;
                std::stringstream ls(line);
                std::string ntok, otok, btok;
                std::getline(ls, ntok, ',');
                std::getline(ls, otok, ',');
                std::getline(ls, btok, ',');
                FamilyAudit::Row r;
                r.index_n = std::stoll(ntok);
                r.order = std::stoll(otok);
                auto slash = btok.find('/');
                if (slash == std::string::npos)
                    r.bound = Rational(std::stoll(btok));
                else
                    r.bound = Rational(std::stoll(btok.substr(0, slash)),
                                       std::stoll(btok.substr(slash + 1)));
                rows.push_back(std::move(r));
            }
            FamilyAudit audit = family_audit(std::move(rows));
            std::cout << "n,order,bound_num,bound_den,ratio\n";
            for (const auto& r : audit.rows) {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.9g", r.ratio);
                std::cout << r.index_n << ',' << r.order << ',' << numerator(r.bound).str()
                          << ',' << denominator(r.bound).str() << ',' << buf << '\n';
            }
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.9g", audit.constant);
            std::cout << "constant," << buf << '\n';
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
