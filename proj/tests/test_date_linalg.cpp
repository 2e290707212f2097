#include <doctest.h>

#include <Eigen/Dense>

#include "kelly/date.hpp"
#include "kelly/errors.hpp"
#include "kelly/linalg.hpp"

using namespace kelly;

TEST_CASE("Date parses and formats ISO-8601") {
    const Date d = Date::parse("2001-02-12");
    CHECK(d.year == 2001);
    CHECK(d.month == 2);
    CHECK(d.day == 12);
    CHECK(d.to_string() == "2001-02-12");

    CHECK_THROWS_AS(Date::parse("2001-13-01"), ParseError);
    CHECK_THROWS_AS(Date::parse("2001-02-30"), ParseError);
    CHECK_THROWS_AS(Date::parse("2001/02/12"), ParseError);
    CHECK_THROWS_AS(Date::parse("20010212"), ParseError);
    CHECK_NOTHROW(Date::parse("2000-02-29"));   // leap year
    CHECK_THROWS_AS(Date::parse("1900-02-29"), ParseError);
}

TEST_CASE("Date ordering and day arithmetic") {
    const Date a = Date::parse("2020-12-31");
    const Date b = Date::parse("2021-01-01");
    CHECK(a < b);
    CHECK(a.plus_days(1) == b);
    CHECK(b.plus_days(-1) == a);
    CHECK(a.plus_days(366) == Date::parse("2022-01-01"));

    // day_number round trip across a few thousand days
    for (std::int64_t n = -1000; n <= 40000; n += 321) {
        CHECK(Date::from_day_number(n).day_number() == n);
    }
    CHECK(Date{1970, 1, 1}.day_number() == 0);
}

TEST_CASE("CholeskyFactor reconstructs and solves") {
    Eigen::MatrixXd a(3, 3);
    a << 4.0, 1.0, 0.5,
         1.0, 3.0, -0.2,
         0.5, -0.2, 2.0;
    CholeskyFactor chol(a);
    const Eigen::MatrixXd rebuilt = chol.lower() * chol.lower().transpose();
    CHECK((rebuilt - a).cwiseAbs().maxCoeff() < 1e-12);

    Eigen::VectorXd b(3);
    b << 1.0, 2.0, 3.0;
    const Eigen::VectorXd x = chol.solve(b);
    CHECK((a * x - b).cwiseAbs().maxCoeff() < 1e-12);

    // x' A^{-1} y against the explicit solve route
    Eigen::VectorXd y(3);
    y << -1.0, 0.5, 2.0;
    CHECK(chol.inverse_quadratic_form(b, y) ==
          doctest::Approx(b.dot(chol.solve(y))).epsilon(1e-12));
}

TEST_CASE("CholeskyFactor reports the failing pivot") {
    Eigen::MatrixXd singular(2, 2);
    singular << 1.0, 1.0,
                1.0, 1.0;
    CHECK_THROWS_AS(CholeskyFactor{singular}, NotPositiveDefiniteError);
    try {
        CholeskyFactor chol(singular);
    } catch (const NotPositiveDefiniteError& e) {
        CHECK(e.pivot() == 1);
        CHECK(std::string(e.what()).find("order 2") != std::string::npos);
    }

    Eigen::MatrixXd negative(2, 2);
    negative << -1.0, 0.0,
                0.0, 1.0;
    try {
        CholeskyFactor chol(negative);
        FAIL("expected NotPositiveDefiniteError");
    } catch (const NotPositiveDefiniteError& e) {
        CHECK(e.pivot() == 0);
    }

    CHECK_THROWS_AS(CholeskyFactor{Eigen::MatrixXd::Zero(2, 3)},
                    std::invalid_argument);
}

TEST_CASE("symmetric_condition_number") {
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(3, 3);
    CHECK(symmetric_condition_number(a) == doctest::Approx(1.0));
    a(2, 2) = 1e-8;
    CHECK(symmetric_condition_number(a) == doctest::Approx(1e8).epsilon(1e-6));
}
