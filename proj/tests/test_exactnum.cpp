#include <doctest.h>

#include <random>

#include "stabkit/errors.hpp"
#include "stabkit/exactnum.hpp"

using namespace stab;

namespace {

ExactComplex c(long re, long im) { return {QuadScalar(re), QuadScalar(im)}; }

}  // namespace

TEST_CASE("rationals parse and print canonically") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("abc"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("1.5"), PreconditionError);
    CHECK(squarefree_part(Integer(72)) == 2);
    CHECK(squarefree_part(Integer(1)) == 1);
}

TEST_CASE("quadratic scalars") {
    const QuadScalar r2 = QuadScalar::sqrt_of(2);
    CHECK(r2 * r2 == QuadScalar(2));
    CHECK(sign(r2 - QuadScalar(Rational(141, 100))) > 0);
    CHECK(sign(r2 - QuadScalar(Rational(71, 50))) < 0);
    CHECK(sign(QuadScalar(Rational(3), Rational(-2), 2)) > 0);  // 3 - 2 sqrt 2 > 0
    CHECK(sign(QuadScalar(Rational(1), Rational(-1), 2)) < 0);
    const QuadScalar x(Rational(1), Rational(1), 2);
    CHECK(x * (QuadScalar(1) / x) == QuadScalar(1));
    CHECK(x.norm() == -1);
    CHECK_THROWS_AS(r2 + QuadScalar::sqrt_of(3), PreconditionError);
    CHECK_THROWS_AS(QuadScalar(Rational(0), Rational(1), 8), PreconditionError);
    CHECK(parse_quad(to_string(x)) == x);
    CHECK(parse_quad("(1/2+3*sqrt(5))") == QuadScalar(Rational(1, 2), Rational(3), 5));
    CHECK(QuadScalar(Rational(2), Rational(5), 1) == QuadScalar(7));
}

TEST_CASE("half-plane membership") {
    CHECK(in_strict_upper_half(c(0, 1)));
    CHECK(in_strict_upper_half(c(-1, 0)));
    CHECK_FALSE(in_strict_upper_half(c(1, 0)));
    CHECK_FALSE(in_strict_upper_half(c(0, -1)));
    CHECK_FALSE(in_strict_upper_half(c(0, 0)));
}

TEST_CASE("phase keys compare exactly") {
    const PhaseKey quarter(0, c(1, 1));
    const PhaseKey half(0, c(0, 1));
    const PhaseKey three_q(0, c(-1, 1));
    const PhaseKey one = PhaseKey::integer(1);
    CHECK(quarter < half);
    CHECK(half < three_q);
    CHECK(three_q < one);
    CHECK(one < quarter + 1);
    CHECK(PhaseKey(0, c(2, 2)) == quarter);  // scale-free
    CHECK(quarter.to_double() == doctest::Approx(0.25));
    CHECK((three_q + 1).to_double() == doctest::Approx(1.75));
    CHECK(one.is_integer());
    CHECK(one.floor() == 1);
    CHECK(quarter.floor() == 0);
    CHECK(PhaseKey::integer(0).floor() == 0);
    CHECK(PhaseKey::integer(-3).floor() == -3);
    CHECK_THROWS_AS(PhaseKey(0, c(1, -1)), PreconditionError);
}

TEST_CASE("phase arithmetic") {
    const PhaseKey quarter(0, c(1, 1));
    const PhaseKey three_q(0, c(-1, 1));
    CHECK(quarter + quarter == PhaseKey(0, c(0, 1)));
    CHECK(three_q + three_q == PhaseKey(0, c(0, 1)) + 1);
    CHECK(three_q - quarter == PhaseKey(0, c(0, 1)));
    CHECK(quarter - three_q == -PhaseKey(0, c(0, 1)));
    CHECK(-PhaseKey::integer(1) == PhaseKey::integer(-1));
    CHECK(-PhaseKey::integer(0) == PhaseKey::integer(0));
    CHECK(abs(quarter - three_q) == PhaseKey(0, c(0, 1)));
    CHECK(PhaseKey::principal(c(0, -1)).to_double() == doctest::Approx(-0.5));
    CHECK(PhaseKey::principal(c(-1, 0)) == PhaseKey::integer(1));
    CHECK(PhaseKey::principal(c(1, 0)) == PhaseKey::integer(0));
    CHECK(PhaseKey(1, c(1, 1)).direction() == c(-1, -1));
}

TEST_CASE("random phase arithmetic agrees with floating point") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-9, 9), k(-3, 3);
    for (int i = 0; i < 500; ++i) {
        ExactComplex z = c(d(rng), d(rng)), w = c(d(rng), d(rng));
        if (z.is_zero() || w.is_zero()) continue;
        const PhaseKey p = PhaseKey::principal(z) + k(rng);
        const PhaseKey q = PhaseKey::principal(w) + k(rng);
        CHECK((p + q).to_double() == doctest::Approx(p.to_double() + q.to_double()));
        CHECK((p - q).to_double() == doctest::Approx(p.to_double() - q.to_double()));
        CHECK((p < q) == (p.to_double() < q.to_double() - 1e-12));
        CHECK(p - q + q == p);
    }
}

TEST_CASE("counterclockwise displacement") {
    CHECK(ccw_displacement(c(1, 0), c(1, 0)) == PhaseKey::integer(0));
    CHECK(ccw_displacement(c(1, 0), c(0, 1)).to_double() == doctest::Approx(0.5));
    CHECK(ccw_displacement(c(1, 0), c(-1, 0)) == PhaseKey::integer(1));
    CHECK(ccw_displacement(c(1, 0), c(0, -1)).to_double() == doctest::Approx(1.5));
    CHECK(ccw_displacement(c(0, 1), c(1, 0)).to_double() == doctest::Approx(1.5));
}

TEST_CASE("phase vs rational comparisons") {
    const PhaseKey quarter(0, c(1, 1));
    CHECK(compare_with_rational(quarter, Rational(1, 4)) == AngleOrder::equal);
    CHECK(compare_with_rational(quarter, Rational(1, 2)) == AngleOrder::less);
    CHECK(compare_with_rational(quarter + 2, Rational(9, 4)) == AngleOrder::equal);
    CHECK(compare_with_rational(quarter, Rational(1, 5)) == AngleOrder::greater);
    CHECK(compare_with_rational(PhaseKey::integer(1), Rational(1)) == AngleOrder::equal);
    CHECK(compare_with_rational(PhaseKey(0, c(1, 3)), Rational(1, 10)) == AngleOrder::greater);
}
