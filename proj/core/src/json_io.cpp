#include "logmom/json_io.hpp"

#include <stdexcept>
#include <string>

namespace logmom {

nlohmann::json to_json(const DirichletPolynomial& q) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [n, a] : q.terms()) coeffs[std::to_string(n)] = a;
    return nlohmann::json{{"coeffs", coeffs}};
}

DirichletPolynomial polynomial_from_json(const nlohmann::json& j) {
    DirichletPolynomial q;
    for (const auto& [key, val] : j.at("coeffs").items()) {
        const std::int64_t n = std::stoll(key);
        if (n < 1) throw std::invalid_argument("polynomial_from_json: index must be >= 1");
        q.set(n, val.get<double>());
    }
    return q;
}

nlohmann::json to_json(const GridMeasure& mu) {
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : mu.atoms()) atoms.push_back({a.location, a.weight});
    return nlohmann::json{
        {"domain", mu.domain() == Domain::UnitInterval ? "unit_interval" : "half_line"},
        {"atoms", atoms},
        {"atom_at_zero", mu.atom_at_zero()}};
}

GridMeasure measure_from_json(const nlohmann::json& j) {
    const std::string dom = j.at("domain").get<std::string>();
    Domain domain;
    if (dom == "unit_interval") domain = Domain::UnitInterval;
    else if (dom == "half_line") domain = Domain::HalfLine;
    else throw std::invalid_argument("measure_from_json: unknown domain " + dom);
    std::vector<Atom> atoms;
    for (const auto& a : j.at("atoms"))
        atoms.push_back(Atom{a.at(0).get<double>(), a.at(1).get<double>()});
    const double zero = j.value("atom_at_zero", 0.0);
    return GridMeasure(domain, std::move(atoms), zero);
}

nlohmann::json to_json(const MomentSequence& w) {
    return nlohmann::json{{"start", w.start}, {"values", w.values}};
}

MomentSequence sequence_from_json(const nlohmann::json& j) {
    return MomentSequence(j.at("start").get<std::int64_t>(),
                          j.at("values").get<std::vector<double>>());
}

nlohmann::json to_json(const DirichletPair& pair) {
    return nlohmann::json{{"sequence", to_json(pair.seq)},
                          {"atom", pair.atom},
                          {"rep_measure", to_json(pair.f.rep())},
                          {"domain_start", pair.f.domain_start()}};
}

nlohmann::json to_json(const PositivityCertificate& cert) {
    return nlohmann::json{{"grid_max", cert.grid_max},
                          {"grid_step", cert.grid_step},
                          {"lipschitz_bound", cert.lipschitz_bound},
                          {"min_grid_value", cert.min_grid_value},
                          {"min_location", cert.min_location},
                          {"margin", cert.margin},
                          {"tail_sign_index", cert.tail_sign_index}};
}

nlohmann::json to_json(const FailureWitness& witness) {
    return nlohmann::json{{"location", witness.location}, {"value", witness.value}};
}

namespace {

nlohmann::json evidence_json(const RejectionEvidence& ev) {
    nlohmann::json out;
    if (const auto* m = std::get_if<MonotoneEvidence>(&ev)) {
        out["kind"] = "monotonicity";
        out["index"] = m->index;
    } else if (const auto* p = std::get_if<PsdEvidence>(&ev)) {
        out["kind"] = "psd";
        out["k"] = p->k;
        out["index_set"] = p->F;
        out["min_eigenvalue"] = p->min_eigenvalue;
        out["eigenvector"] = p->eigenvector;
    } else if (const auto* c = std::get_if<CmEvidence>(&ev)) {
        out["kind"] = "power_subsequence_cm";
        out["k"] = c->k;
        out["order"] = c->order;
        out["position"] = c->position;
    } else if (const auto* d = std::get_if<DualCertificate>(&ev)) {
        out["kind"] = "dual_certificate";
        out["polynomial"] = to_json(d->q);
        out["positivity"] = to_json(d->positivity);
        out["value"] = d->value;
    }
    return out;
}

} // namespace

nlohmann::json to_json(const MembershipReport& report) {
    nlohmann::json out;
    switch (report.verdict) {
        case Verdict::Member: out["verdict"] = "member"; break;
        case Verdict::Rejected: out["verdict"] = "rejected"; break;
        case Verdict::Inconclusive: out["verdict"] = "inconclusive"; break;
    }
    out["tol"] = report.tol;
    out["residual"] = report.residual;
    if (report.recovered) {
        out["recovered"] = {{"atom", report.recovered->atom},
                            {"nu", to_json(report.recovered->nu)},
                            {"residual", report.recovered->residual}};
    }
    if (report.evidence) out["evidence"] = evidence_json(*report.evidence);
    return out;
}

} // namespace logmom
