#include "copbench/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "copbench/constructions.hpp"
#include "copbench/errors.hpp"
#include "copbench/game.hpp"
#include "copbench/gf.hpp"
#include "copbench/graph.hpp"
#include "copbench/metrics.hpp"

namespace copbench {

std::vector<int> prime_powers_upto(int q_max) {
    std::vector<int> out;
    for (int q = 2; q <= q_max; ++q)
        if (is_prime_power(q)) out.push_back(q);
    return out;
}

namespace {

void fill_row(SweepRow& row, const Graph& g, const BoundCertificate& cert) {
    Metrics m = metrics(g);
    row.order = g.order();
    row.edge_count = g.edge_count();
    row.min_degree = m.min_degree;
    row.max_degree = m.max_degree;
    row.girth = m.girth;
    row.diameter = m.diameter;
    row.bound = cert.bound;
    row.ratio = to_double(cert.bound) / std::sqrt(static_cast<double>(g.order()));
}

void maybe_exact(SweepRow& row, const Graph& g, const SweepOptions& opt) {
    if (opt.exact_budget == 0) return;
    try {
        row.exact_c = cop_number(g, opt.kmax, opt.exact_budget);
    } catch (const Error&) {
        // out of budget or beyond kmax: leave the column empty
    }
}

void maybe_write(const Graph& g, const SweepOptions& opt, const std::string& name) {
    if (opt.out_dir.empty()) return;
    save_edge_list_file(g, opt.out_dir + "/" + name + ".txt");
}

void finish(SweepOutcome& out) {
    std::vector<FamilyAudit::Row> rows;
    long long idx = 0;
    for (const auto& r : out.rows) {
        if (r.failed) {
            out.any_failed = true;
            continue;
        }
        rows.push_back({idx++, r.order, r.bound, 0.0});
    }
    if (!rows.empty()) out.audit = family_audit(std::move(rows));
}

} // namespace

SweepOutcome sweep_incidence(int q_max, const SweepOptions& opt) {
    SweepOutcome out;
    for (int q : prime_powers_upto(q_max)) {
        SweepRow row;
        row.params = "incidence q=" + std::to_string(q);
        try {
            Graph g = incidence_graph(projective_plane(q));
            BoundCertificate cert = girth5_certificate(g);
            fill_row(row, g, cert);
            maybe_exact(row, g, opt);
            maybe_write(g, opt, "incidence_q" + std::to_string(q));
        } catch (const Error& e) {
            row.failed = true;
            row.error = e.what();
        }
        out.rows.push_back(std::move(row));
    }
    finish(out);
    return out;
}

SweepOutcome sweep_bf(int q, const std::vector<int>& ms, const SweepOptions& opt) {
    SweepOutcome out;
    for (int m : ms) {
        SweepRow row;
        try {
            std::uint64_t seed = bf_find_seed(q, m, opt.seed, opt.seed_retries);
            row.params = "bf q=" + std::to_string(q) + " m=" + std::to_string(m) +
                         " seed=" + std::to_string(seed);
            Graph g = bf_graph(q, m, seed);
            BoundCertificate cert = girth5_certificate(g);
            fill_row(row, g, cert);
            maybe_exact(row, g, opt);
            maybe_write(g, opt,
                        "bf_q" + std::to_string(q) + "_m" + std::to_string(m));
        } catch (const Error& e) {
            row.params = "bf q=" + std::to_string(q) + " m=" + std::to_string(m);
            row.failed = true;
            row.error = e.what();
        }
        out.rows.push_back(std::move(row));
    }
    finish(out);
    return out;
}

SweepOutcome sweep_strip(const std::vector<int>& qs, const SweepOptions& opt) {
    SweepOutcome out;
    for (int q : qs) {
        try {
            Graph host = incidence_graph(projective_plane(q));
            FactorDecomposition fd = factorize(host, 1);
            int imax = static_cast<int>(std::floor(opt.eps * (q + 1)));
            for (int i = 1; i <= imax; ++i) {
                SweepRow row;
                row.params = "strip q=" + std::to_string(q) + " i=" + std::to_string(i);
                try {
                    Graph g = strip_factors(host, fd, i, opt.eps);
                    BoundCertificate cert = k2t_certificate(g, 2);
                    fill_row(row, g, cert);
                    maybe_exact(row, g, opt);
                    maybe_write(g, opt,
                                "strip_q" + std::to_string(q) + "_i" + std::to_string(i));
                } catch (const Error& e) {
                    row.failed = true;
                    row.error = e.what();
                }
                out.rows.push_back(std::move(row));
            }
        } catch (const Error& e) {
            SweepRow row;
            row.params = "strip q=" + std::to_string(q);
            row.failed = true;
            row.error = e.what();
            out.rows.push_back(std::move(row));
        }
    }
    finish(out);
    return out;
}

void write_sweep_csv(const SweepOutcome& s, std::ostream& out) {
    out << "params,order,edges,min_degree,max_degree,girth,diameter,"
           "bound_num,bound_den,ratio,exact_c,status\n";
    for (const auto& r : s.rows) {
        out << r.params << ',';
        if (r.failed) {
            std::string msg = r.error;
            for (char& ch : msg)
                if (ch == ',' || ch == '\n') ch = ';';
            out << ",,,,,,,,,," << "FAILED: " << msg << '\n';
            continue;
        }
        out << r.order << ',' << r.edge_count << ',' << r.min_degree << ',' << r.max_degree
            << ',';
        if (r.girth)
            out << *r.girth;
        else
            out << "inf";
        out << ',';
        if (r.diameter)
            out << *r.diameter;
        else
            out << "inf";
        out << ',' << numerator(r.bound).str() << ',' << denominator(r.bound).str() << ',';
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.9g", r.ratio);
        out << buf << ',';
        if (r.exact_c) out << *r.exact_c;
        out << ",OK\n";
    }
}

} // namespace copbench
