#include <doctest.h>

#include <cmath>

#include "stabkit/errors.hpp"
#include "stabkit/stabspace.hpp"

using namespace stab;

namespace {

ExactComplex c(long re, long im) { return {QuadScalar(re), QuadScalar(im)}; }
ExactComplex cq(const Rational& re, const Rational& im) { return {QuadScalar(re), QuadScalar(im)}; }

Matrix one() {
    Matrix m(1, 1);
    m(0, 0) = 1;
    return m;
}

struct A2 {
    std::shared_ptr<const Quiver> q = std::make_shared<const Quiver>(Quiver::a_n(2));
    Field f = Field::prime(2);
    QuiverRep s1 = QuiverRep::simple(q, f, 0);
    QuiverRep s2 = QuiverRep::simple(q, f, 1);
    QuiverRep p{q, f, {1, 1}, {one()}};
    CentralCharge zstd{{c(-1, 1), c(1, 1)}};

    std::vector<TestObject> testset() const {
        FormalComplex cx = FormalComplex::of(s2);
        cx.add_part(1, s1);
        return {{"S1", FormalComplex::of(s1)},
                {"S2", FormalComplex::of(s2)},
                {"P", FormalComplex::of(p)},
                {"C", cx},
                {"P1", FormalComplex::of(p, 1)}};
    }
};

}  // namespace

TEST_CASE("acting by a scalar halves the charge and scales the metric by log 2") {
    A2 a;
    const StabilityCondition s(a.zstd);
    const auto t = act(s, GLtildeElement(Mat2::scalar(2), 0));
    CHECK(t.charge({1, 1}) == c(0, 1));
    const auto d = stab_distance(s, t, a.testset());
    CHECK(std::abs(d.value - std::log(2.0)) < 1e-12);
    for (const auto& row : d.rows) CHECK(row.phase_term == PhaseKey::integer(0));
    CHECK(mass(FormalComplex::of(a.p), t).value == doctest::Approx(1.0));
    CHECK(stab_distance(s, s, a.testset()).value == 0.0);
}

TEST_CASE("the shift element preserves semistability and raises phases by one") {
    A2 a;
    const StabilityCondition s(a.zstd);
    const auto r = gl_act(s, GLtildeElement::shift(), a.testset());
    CHECK(r.sigma.charge({1, 0}) == c(1, -1));
    for (const auto& row : r.rows) {
        CHECK(row.semistable_before == row.semistable_after);
        if (row.phase_before) {
            REQUIRE(row.phase_after);
            CHECK(*row.phase_after == *row.phase_before + 1);
        }
    }
}

TEST_CASE("norm of a charge difference") {
    A2 a;
    const StabilityCondition s(a.zstd);
    const auto n = norm_sigma(a.zstd.values(), s, a.testset());
    CHECK(n.value == doctest::Approx(1.0));
    const auto z = norm_sigma({c(0, 0), c(0, 0)}, s, a.testset());
    CHECK(z.value == 0.0);
    const auto d = norm_sigma({c(1, 0), c(0, 0)}, s, a.testset());
    CHECK(d.value == doctest::Approx(1 / std::sqrt(2.0)));
}

TEST_CASE("sin^2 enclosure") {
    const auto b = sin_squared_bounds(Rational(1, 10));
    const double s = std::sin(M_PI / 10);
    CHECK(b.lower.get_d() <= s * s);
    CHECK(b.upper.get_d() >= s * s);
    CHECK(Rational(b.upper - b.lower).get_d() < 1e-8);
    const auto h = sin_squared_bounds(Rational(1, 6));
    CHECK(h.lower <= Rational(1, 4));
    CHECK(h.upper >= Rational(1, 4));
}

TEST_CASE("deformation: small perturbations move slices by less than eps") {
    A2 a;
    const StabilityCondition s(a.zstd);
    const CentralCharge w({c(-1, 1), cq(1, Rational(11, 10))});
    const auto r = deform(s, w, Rational(1, 10), a.testset());
    CHECK(r.tau.heart_charge() == w);
    CHECK(compare_with_rational(r.report.d_testset, Rational(1, 10)) == AngleOrder::less);
    CHECK(r.report.d_float < 0.1);
    for (const auto& h : r.report.hypothesis) CHECK(h.holds);

    CHECK_THROWS_AS(deform(s, CentralCharge({c(-1, 1), c(2, 1)}), Rational(1, 10), a.testset()), PreconditionError);
    CHECK_THROWS_AS(deform(s, std::vector<ExactComplex>{c(-1, 1), cq(1, Rational(-1, 10))}, Rational(1, 10),
                           a.testset()),
                    HeartChangeUnsupported);
    CHECK_THROWS_AS(deform(s, w, Rational(1, 8), a.testset()), PreconditionError);
    CHECK_THROWS_AS(deform(s, w, Rational(0), a.testset()), PreconditionError);
    const StabilityCondition moved(a.zstd, GLtildeElement(Mat2::scalar(2), 0));
    CHECK_THROWS_AS(deform(moved, w, Rational(1, 10), a.testset()), PreconditionError);
}

TEST_CASE("axiom validation") {
    A2 a;
    const StabilityCondition s(a.zstd);
    const auto rep = validate_axioms(s, a.testset());
    CHECK(rep.ok());
    CHECK(rep.checked_a > 0);
    CHECK(rep.checked_b > 0);
    CHECK(rep.checked_c > 0);
    CHECK(rep.checked_d > 0);
    CHECK(validate_axioms(act(s, GLtildeElement({0, -1, 1, 0}, 1)), a.testset()).ok());

    AxiomReport bad;
    check_phase_labels(s, {{"S1", {1, 0}, PhaseKey(0, c(1, 1))}}, bad);
    CHECK_FALSE(bad.ok());
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0].axiom == 'a');
    AxiomReport good;
    check_phase_labels(s, {{"S1[1]", {-1, 0}, PhaseKey(0, c(-1, 1)) + 1}}, good);
    CHECK(good.ok());
}
