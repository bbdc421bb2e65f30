#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "copbench/graph.hpp"
#include "copbench/rational.hpp"

namespace copbench {

enum class CertKind { K2TLower, Girth5Lower, Exact, HyperUpper, DlcUpper };

const char* cert_kind_name(CertKind k);

// Machine-checkable bound record. Lower-bound kinds re-verify from the
// graph and params alone; bounds are exact rationals, never floored.
struct BoundCertificate {
    CertKind kind = CertKind::Exact;
    std::map<std::string, long long> params;
    Rational bound;
    nlohmann::json witness;
};

// K_{2,t}-freeness lower bound: with k vertices of degree < D and
// D > k, c(G) >= (D-k)/t. When D is omitted the scan maximizes (D-k)/t
// over thresholds present in the degree multiset (plus max degree + 1).
// Additionally requires n - k > ceil(bound) - 1 so the evading robber
// has room to start. Errors: NotK2TFree, NoValidThreshold.
BoundCertificate k2t_certificate(const Graph& g, int t, std::optional<int> D = {});

// Girth >= 5 variant: c(G) >= D - k. Errors: GirthTooSmall, NoValidThreshold.
BoundCertificate girth5_certificate(const Graph& g, std::optional<int> D = {});

// Records a solver-computed exact cop number as a certificate.
BoundCertificate exact_certificate(const Graph& g, int cop_number);

// Recomputes a lower certificate from (graph, params) and checks that the
// stored bound matches.
bool reverify(const BoundCertificate& cert, const Graph& g);

nlohmann::json certificate_json(const BoundCertificate& cert);

// Finite Meyniel-extremal audit: per-row ratio bound/sqrt(order) and the
// family constant d = min ratio. Comparisons against rational thresholds
// are exact (squared cross-multiplication); the double fields are for
// display only.
struct FamilyAudit {
    struct Row {
        long long index_n = 0;
        long long order = 0;
        Rational bound;
        double ratio = 0.0;
    };
    std::vector<Row> rows; // sorted by order
    int argmin = -1;
    double constant = 0.0;

    // Exact: min_i bound_i/sqrt(order_i) >= c.
    bool constant_at_least(const Rational& c) const;
};

FamilyAudit family_audit(std::vector<FamilyAudit::Row> rows); // EmptyFamily

// Exact comparison bound/sqrt(order) >= c for c >= 0.
bool ratio_at_least(const Rational& bound, long long order, const Rational& c);

} // namespace copbench
