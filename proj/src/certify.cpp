#include "copbench/certify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "copbench/cover.hpp"
#include "copbench/errors.hpp"
#include "copbench/game.hpp"
#include "copbench/metrics.hpp"

namespace copbench {

namespace {

bool recheck_exact(const Graph& g, int c) { return cop_number(g, c) == c; }

bool recheck_dlc(const Graph& g, const Rational& bound) {
    return dlc_cover_bound(g).certificate.bound == bound;
}

} // namespace

const char* cert_kind_name(CertKind k) {
    switch (k) {
        case CertKind::K2TLower: return "K2T_LOWER";
        case CertKind::Girth5Lower: return "GIRTH5_LOWER";
        case CertKind::Exact: return "EXACT";
        case CertKind::HyperUpper: return "HYPER_UPPER";
        case CertKind::DlcUpper: return "DLC_UPPER";
    }
    return "UNKNOWN";
}

namespace {

// Candidate thresholds: degrees present plus max degree + 1. Other D
// cannot improve D - k, which only changes at degree values.
std::vector<int> threshold_candidates(const Graph& g) {
    std::set<int> ds;
    int dmax = 0;
    for (int v = 0; v < g.order(); ++v) {
        ds.insert(g.degree(v));
        dmax = std::max(dmax, g.degree(v));
    }
    ds.insert(dmax + 1);
    return {ds.begin(), ds.end()};
}

int count_below(const Graph& g, int D) {
    int k = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) < D) ++k;
    return k;
}

// The evading robber needs room in the high-degree part: more vertices
// of degree >= D than cops.
bool support_ok(const Graph& g, int D, int k, const Rational& bound) {
    BigInt cops_ceil = numerator(bound) / denominator(bound);
    if (cops_ceil * denominator(bound) != numerator(bound)) cops_ceil += 1;
    return BigInt(g.order() - k) > cops_ceil - 1;
}

struct Threshold {
    int D = 0;
    int k = 0;
    Rational bound;
    bool valid = false;
};

Threshold best_threshold(const Graph& g, int t, std::optional<int> D_opt) {
    Threshold best;
    std::vector<int> cands;
    if (D_opt)
        cands.push_back(*D_opt);
    else
        cands = threshold_candidates(g);
    for (int D : cands) {
        int k = count_below(g, D);
        if (D <= k) continue;
        Rational bound = Rational(D - k, t);
        if (!support_ok(g, D, k, bound)) continue;
        if (!best.valid || bound > best.bound) best = {D, k, bound, true};
    }
    return best;
}

} // namespace

BoundCertificate k2t_certificate(const Graph& g, int t, std::optional<int> D) {
    if (t < 1) fail(Err::FormatError, "t must be >= 1");
    if (!is_k2t_free(g, t))
        fail(Err::NotK2TFree, "graph contains K_{2," + std::to_string(t) + "}");
    Threshold th = best_threshold(g, t, D);
    if (!th.valid) fail(Err::NoValidThreshold, "no degree threshold D with D > k");
    BoundCertificate cert;
    cert.kind = CertKind::K2TLower;
    cert.params = {{"t", t}, {"D", th.D}, {"k", th.k}};
    cert.bound = th.bound;
    cert.witness = {{"n", g.order()},
                    {"min_degree", metrics(g).min_degree},
                    {"k2t_free", true},
                    {"threshold_scanned", !D.has_value()}};
    return cert;
}

BoundCertificate girth5_certificate(const Graph& g, std::optional<int> D) {
    Metrics m = metrics(g);
    if (m.girth.has_value() && *m.girth < 5)
        fail(Err::GirthTooSmall, "girth " + std::to_string(*m.girth) + " < 5");
    Threshold th = best_threshold(g, 1, D);
    if (!th.valid) fail(Err::NoValidThreshold, "no degree threshold D with D > k");
    BoundCertificate cert;
    cert.kind = CertKind::Girth5Lower;
    cert.params = {{"D", th.D}, {"k", th.k}};
    cert.bound = th.bound;
    cert.witness = {{"n", g.order()},
                    {"girth", m.girth ? nlohmann::json(*m.girth) : nlohmann::json()},
                    {"min_degree", m.min_degree},
                    {"threshold_scanned", !D.has_value()}};
    return cert;
}

BoundCertificate exact_certificate(const Graph& g, int cop_number) {
    BoundCertificate cert;
    cert.kind = CertKind::Exact;
    cert.params = {{"cops", cop_number}};
    cert.bound = Rational(cop_number);
    cert.witness = {{"n", g.order()}, {"method", "game fixpoint"}};
    return cert;
}

bool reverify(const BoundCertificate& cert, const Graph& g) {
    try {
        switch (cert.kind) {
            case CertKind::K2TLower: {
                auto fresh = k2t_certificate(g, static_cast<int>(cert.params.at("t")),
                                             static_cast<int>(cert.params.at("D")));
                return fresh.bound == cert.bound;
            }
            case CertKind::Girth5Lower: {
                auto fresh = girth5_certificate(g, static_cast<int>(cert.params.at("D")));
                return fresh.bound == cert.bound;
            }
            case CertKind::Exact: {
                int c = static_cast<int>(cert.params.at("cops"));
                return recheck_exact(g, c) && cert.bound == Rational(c);
            }
            case CertKind::DlcUpper:
                return recheck_dlc(g, cert.bound);
            case CertKind::HyperUpper:
                return false; // needs the originating hypergraph, not just a graph
        }
        return false;
    } catch (const Error&) {
        return false;
    }
}

nlohmann::json certificate_json(const BoundCertificate& cert) {
    nlohmann::json j;
    j["kind"] = cert_kind_name(cert.kind);
    j["params"] = cert.params;
    j["bound_num"] = numerator(cert.bound).str();
    j["bound_den"] = denominator(cert.bound).str();
    j["bound"] = to_double(cert.bound);
    j["witness"] = cert.witness;
    return j;
}

bool ratio_at_least(const Rational& bound, long long order, const Rational& c) {
    check(order >= 1, "order must be positive");
    if (bound < 0) return c <= 0;
    // bound/sqrt(order) >= c  <=>  bound^2 >= c^2 * order   (bound, c >= 0)
    if (c <= 0) return true;
    return bound * bound >= c * c * order;
}

FamilyAudit family_audit(std::vector<FamilyAudit::Row> rows) {
    if (rows.empty()) fail(Err::EmptyFamily, "no rows to audit");
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.order < b.order; });
    FamilyAudit audit;
    audit.rows = std::move(rows);
    for (std::size_t i = 0; i < audit.rows.size(); ++i) {
        auto& r = audit.rows[i];
        check(r.order >= 1, "row order must be positive");
        r.ratio = to_double(r.bound) / std::sqrt(static_cast<double>(r.order));
        // exact argmin: bound_i^2 * order_j vs bound_j^2 * order_i
        if (audit.argmin < 0) {
            audit.argmin = static_cast<int>(i);
        } else {
            const auto& m = audit.rows[audit.argmin];
            if (r.bound * r.bound * m.order < m.bound * m.bound * r.order)
                audit.argmin = static_cast<int>(i);
        }
    }
    audit.constant = audit.rows[audit.argmin].ratio;
    return audit;
}

bool FamilyAudit::constant_at_least(const Rational& c) const {
    check(argmin >= 0, "audit has no rows");
    const auto& m = rows[argmin];
    return ratio_at_least(m.bound, m.order, c);
}

} // namespace copbench
