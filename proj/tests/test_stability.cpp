#include <doctest.h>

#include <cmath>

#include "stabkit/errors.hpp"
#include "stabkit/stability.hpp"

using namespace stab;

namespace {

ExactComplex c(long re, long im) { return {QuadScalar(re), QuadScalar(im)}; }

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
    CentralCharge zflip{{c(1, 1), c(-1, 1)}};
};

}  // namespace

TEST_CASE("charges must lie in the half-plane") {
    CHECK_THROWS_AS(CentralCharge({c(1, 0)}), PreconditionError);
    CHECK_NOTHROW(CentralCharge({c(-1, 0)}));
    const CentralCharge z({c(1, 1), {QuadScalar(0), QuadScalar::sqrt_of(2)}});
    CHECK(z.radicand() == 2);
    CHECK(z({1, 1}) == ExactComplex{QuadScalar(1), QuadScalar(Rational(1), Rational(1), 2)});
}

TEST_CASE("A2 semistability under the two orderings") {
    A2 a;
    CHECK(is_semistable(a.p, a.zstd).semistable);
    const auto cert = is_semistable(a.p, a.zflip);
    CHECK_FALSE(cert.semistable);
    REQUIRE(cert.witness);
    CHECK(cert.witness->dims() == DimVector{0, 1});
    CHECK(is_semistable(a.s1, a.zflip).semistable);
    // S1 + S2 with zero map: S1 destabilises under Zstd.
    const auto split = direct_sum(a.s1, a.s2);
    CHECK_FALSE(is_semistable(split, a.zstd).semistable);
    CHECK_FALSE(is_semistable(split, a.zflip).semistable);
}

TEST_CASE("HN filtrations agree and are correct on the fixture") {
    A2 a;
    const auto hn = hn_filtration_max_sub(a.p, a.zflip);
    CHECK(hn == hn_filtration_mdq(a.p, a.zflip));
    REQUIRE(hn.length() == 2);
    CHECK(hn.classes[0] == DimVector{0, 1});
    CHECK(hn.classes[1] == DimVector{1, 0});
    CHECK(hn.phases[0] == PhaseKey(0, c(-1, 1)));
    CHECK(hn.phases[1] == PhaseKey(0, c(1, 1)));
    CHECK(hn.factors[0] == a.s2);
    CHECK(hn.factors[1] == a.s1);

    const auto single = hn_filtration_max_sub(a.p, a.zstd);
    CHECK(single.length() == 1);
    CHECK(single == hn_filtration_mdq(a.p, a.zstd));
    CHECK(single.phases[0] == PhaseKey(0, c(0, 1)));

    const auto m = mass(hn, a.zflip);
    CHECK(m.value == doctest::Approx(2 * std::sqrt(2.0)));
    CHECK(m.error_bound < 1e-12);
    CHECK(mass(single, a.zstd).value == doctest::Approx(2.0));
}

TEST_CASE("equal phases are merged into one factor") {
    A2 a;
    const CentralCharge flat({c(0, 1), c(0, 1)});
    const auto split = direct_sum(a.s1, a.s2);
    const auto hn = hn_filtration_max_sub(split, flat);
    CHECK(hn.length() == 1);
    CHECK(hn == hn_filtration_mdq(split, flat));
}

TEST_CASE("over Q the verdict comes from dimension vectors or is refused") {
    auto q = std::make_shared<const Quiver>(Quiver::a_n(3));
    Matrix h(1, 1), t(1, 1);
    h(0, 0) = Rational(1, 2);
    t(0, 0) = 3;
    const QuiverRep p(q, Field::rationals(), {1, 1, 1}, {h, t});
    const CentralCharge good({c(0, 1), c(0, 1), c(0, 1)});
    const auto cert = is_semistable(p, good);
    CHECK(cert.semistable);
    CHECK(cert.by_dimension_vectors);
    const CentralCharge bad({c(1, 1), c(1, 1), c(-1, 1)});
    CHECK_THROWS_WITH_AS(is_semistable(p, bad), doctest::Contains("cannot decide"), PreconditionError);
    CHECK_THROWS_AS(hn_filtration_max_sub(p, bad), PreconditionError);
}

TEST_CASE("discreteness of the charge image") {
    const auto d = check_discreteness(CentralCharge({c(-1, 1), c(1, 1)}));
    CHECK(d.discrete);
    CHECK(d.rank_over_z == 2);
    const auto n = check_discreteness(CentralCharge({c(0, 1), {QuadScalar(0), QuadScalar::sqrt_of(2)}}));
    CHECK_FALSE(n.discrete);
    CHECK(n.rank_over_z == 2);
    CHECK(n.rank_over_r == 1);
    // Rational but collinear values still form a lattice of rank one.
    const auto r = check_discreteness(CentralCharge({c(0, 1), c(0, 3)}));
    CHECK(r.discrete);
    CHECK(r.rank_over_z == 1);
    // (i, i + sqrt2) spans a rank-2 lattice in R^2.
    const auto l = check_discreteness(CentralCharge({c(0, 1), {QuadScalar::sqrt_of(2), QuadScalar(1)}}));
    CHECK(l.discrete);
}
