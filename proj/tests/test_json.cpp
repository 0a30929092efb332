#include <doctest.h>

#include <cmath>

#include "logmom/json_io.hpp"
#include "logmom/logmoment.hpp"

using logmom::Domain;
using logmom::GridMeasure;
using logmom::MomentSequence;

TEST_CASE("polynomial round trip") {
    logmom::DirichletPolynomial q;
    q.set(1, 1.0);
    q.set(2, -2.0);
    q.set(4, 1.0);
    const auto back = logmom::polynomial_from_json(logmom::to_json(q));
    CHECK(back.terms() == q.terms());
    CHECK_THROWS(logmom::polynomial_from_json(
        nlohmann::json::parse(R"({"coeffs":{"0":1.0}})")));
}

TEST_CASE("measure round trip") {
    const GridMeasure mu(Domain::UnitInterval, {{0.25, 0.5}, {1.0, 0.3}}, 0.2);
    const auto back = logmom::measure_from_json(logmom::to_json(mu));
    CHECK(back.domain() == mu.domain());
    CHECK(back.atom_at_zero() == mu.atom_at_zero());
    REQUIRE(back.atoms().size() == mu.atoms().size());
    for (std::size_t i = 0; i < mu.atoms().size(); ++i) {
        CHECK(back.atoms()[i].location == mu.atoms()[i].location);
        CHECK(back.atoms()[i].weight == mu.atoms()[i].weight);
    }
}

TEST_CASE("sequence round trip") {
    const MomentSequence w(2, {0.5, 0.25, 0.125});
    const auto back = logmom::sequence_from_json(logmom::to_json(w));
    CHECK(back.start == 2);
    CHECK(back.values == w.values);
}

TEST_CASE("membership report serialization") {
    std::vector<double> inv;
    for (int n = 1; n <= 64; ++n) inv.push_back(1.0 / (n + 1));
    const auto report = logmom::membership(MomentSequence(1, inv));
    const auto j = logmom::to_json(report);
    CHECK(j.at("verdict") == "rejected");
    CHECK(j.at("evidence").at("kind") == "psd");

    std::vector<double> mem;
    for (int n = 1; n <= 32; ++n) mem.push_back(std::pow(double(n), -2.0));
    const auto j2 = logmom::to_json(logmom::membership(MomentSequence(1, mem)));
    CHECK(j2.at("verdict") == "member");
    CHECK(j2.at("residual").get<double>() <= 1e-6);
    CHECK(j2.contains("recovered"));
}
