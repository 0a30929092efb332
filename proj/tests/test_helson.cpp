#include <doctest.h>

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "logmom/helson.hpp"
#include "logmom/measure.hpp"

using logmom::CompletelyMonotoneFn;
using logmom::DirichletPair;
using logmom::Domain;
using logmom::GridMeasure;
using logmom::MomentSequence;

namespace {

MomentSequence multiplicative_sequence(double p, std::int64_t top) {
    std::vector<double> v;
    for (std::int64_t n = 1; n <= top; ++n) v.push_back(std::pow(double(n), -p));
    return MomentSequence(1, std::move(v));
}

DirichletPair geometric_pair(double alpha, int N) {
    std::vector<double> v;
    for (int n = 1; n <= N; ++n) v.push_back(std::pow(alpha, std::log(double(n))));
    CompletelyMonotoneFn f(GridMeasure::point_mass(Domain::HalfLine, -std::log(alpha)));
    return DirichletPair{MomentSequence(1, std::move(v)), f, 0.0};
}

} // namespace

TEST_CASE("helson truncation build") {
    const auto w = multiplicative_sequence(1.5, 9);
    const auto M = logmom::helson_build(w, 3);
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            CHECK(M.entries(m - 1, n - 1) ==
                  doctest::Approx(std::pow(double(m), -1.5) * std::pow(double(n), -1.5)));

    std::vector<double> chi(16, 0.0);
    chi[0] = 1.0;
    const auto Mc = logmom::helson_build(MomentSequence(1, chi), 4);
    CHECK(Mc.entries(0, 0) == 1.0);
    CHECK(Mc.entries.sum() == doctest::Approx(1.0));

    const double alpha = 0.8;
    std::vector<double> geo;
    for (int n = 1; n <= 16; ++n) geo.push_back(std::pow(alpha, std::log(double(n))));
    const auto Mg = logmom::helson_build(MomentSequence(1, geo), 4);
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            CHECK(Mg.entries(m - 1, n - 1) ==
                  doctest::Approx(std::pow(alpha, std::log(double(m)) + std::log(double(n)))));

    CHECK_THROWS(logmom::helson_build(multiplicative_sequence(1.0, 8), 3));
}

TEST_CASE("fiber constancy") {
    const auto w = multiplicative_sequence(0.9, 144);
    const auto M = logmom::helson_build(w, 12);
    CHECK(M.entries(1, 5) == M.entries(2, 3));
    CHECK(M.entries(2, 3) == M.entries(0, 11));
    CHECK(M.entries == M.entries.transpose().eval());
}

TEST_CASE("operator norm of rank-1 truncations") {
    const double p = 0.8;
    const auto w = multiplicative_sequence(p, 64);
    const auto M = logmom::helson_build(w, 8);
    double partial = 0.0;
    for (int n = 1; n <= 8; ++n) partial += std::pow(double(n), -2.0 * p);
    CHECK(logmom::operator_norm(M) == doctest::Approx(partial).epsilon(1e-8));

    std::vector<double> chi(4, 0.0);
    chi[0] = 1.0;
    CHECK(logmom::operator_norm(logmom::helson_build(MomentSequence(1, chi), 2)) ==
          doctest::Approx(1.0));
}

TEST_CASE("norms increase toward the zeta bound") {
    const double alpha = 0.5;
    std::vector<double> geo;
    for (int n = 1; n <= 64 * 64; ++n)
        geo.push_back(std::pow(alpha, std::log(double(n))));
    const MomentSequence w(1, std::move(geo));
    const double q = -2.0 * std::log(alpha); // entries n^{-q}, q = 2 ln 2
    double prev = 0.0;
    for (std::int64_t N : {8, 16, 32, 64}) {
        const double norm = logmom::operator_norm(logmom::helson_build(w, N));
        CHECK(norm >= prev - 1e-12);
        double partial = 0.0;
        for (std::int64_t n = 1; n <= N; ++n) partial += std::pow(double(n), -q);
        const double tail = std::pow(double(N), 1.0 - q) / (q - 1.0);
        CHECK(norm <= partial + tail);
        prev = norm;
    }
}

TEST_CASE("boundedness criterion") {
    std::vector<double> geo;
    for (int n = 1; n <= 10000; ++n)
        geo.push_back(std::pow(0.5, std::log(double(n))));
    CHECK(logmom::boundedness_criterion(MomentSequence(1, std::move(geo)), 3.0).ok);

    const auto slow = multiplicative_sequence(0.25, 10000);
    const auto res = logmom::boundedness_criterion(slow, 5.0);
    CHECK(!res.ok);
    CHECK(res.violating_index >= 2);

    std::vector<double> chi(64, 0.0);
    chi[0] = 1.0;
    CHECK(logmom::boundedness_criterion(MomentSequence(1, chi), 0.1).ok);
}

TEST_CASE("cm criterion") {
    // f(x) = alpha^x: x f(x) e^{x/2} is bounded iff ln(alpha) + 1/2 < 0
    CHECK(logmom::cm_criterion(geometric_pair(0.5, 16), 3.0));
    CHECK(!logmom::cm_criterion(geometric_pair(0.7, 16), 100.0));

    DirichletPair zero{MomentSequence(1, std::vector<double>(8, 0.0)),
                       CompletelyMonotoneFn(GridMeasure::zero(Domain::HalfLine)), 0.0};
    CHECK(logmom::cm_criterion(zero, 0.0));

    DirichletPair with_atom{MomentSequence(1, {1.0, 0.0, 0.0}),
                            CompletelyMonotoneFn(GridMeasure::zero(Domain::HalfLine)),
                            1.0};
    CHECK_THROWS(logmom::cm_criterion(with_atom, 10.0));
}

TEST_CASE("member truncations are psd") {
    const auto w = multiplicative_sequence(1.2, 64);
    const auto M = logmom::helson_build(w, 8);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M.entries);
    CHECK(es.eigenvalues()(0) >= -1e-12);
}
