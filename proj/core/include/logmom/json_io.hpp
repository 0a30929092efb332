#pragma once

#include <json.hpp>

#include "logmom/cmono.hpp"
#include "logmom/dirichlet.hpp"
#include "logmom/logmoment.hpp"
#include "logmom/measure.hpp"
#include "logmom/sequence.hpp"

namespace logmom {

// Wire formats:
//   polynomial: {"coeffs": {"2": 1.0, ...}}           (string integer keys)
//   measure:    {"domain": "unit_interval"|"half_line",
//                "atoms": [[loc, w], ...], "atom_at_zero": w0}
//   sequence:   {"start": j, "values": [...]}
//   pair:       {"sequence": ..., "atom": c, "rep_measure": ...}

nlohmann::json to_json(const DirichletPolynomial& q);
DirichletPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GridMeasure& mu);
GridMeasure measure_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MomentSequence& w);
MomentSequence sequence_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DirichletPair& pair);

nlohmann::json to_json(const PositivityCertificate& cert);
nlohmann::json to_json(const FailureWitness& witness);

nlohmann::json to_json(const MembershipReport& report);

} // namespace logmom
