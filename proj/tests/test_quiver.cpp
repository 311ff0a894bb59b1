#include <doctest.h>

#include "stabkit/errors.hpp"
#include "stabkit/quiver.hpp"

using namespace stab;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    Matrix m;
    bool first = true;
    for (const auto& r : rows) {
        std::vector<Rational> v;
        for (long x : r) v.emplace_back(x);
        if (first) {
            m = Matrix(0, v.size());
            first = false;
        }
        m.append_row(v);
    }
    return m;
}

std::shared_ptr<const Quiver> a2() { return std::make_shared<const Quiver>(Quiver::a_n(2)); }

}  // namespace

TEST_CASE("rref, rank, and membership over F_p and Q") {
    const Field f2 = Field::prime(2), q = Field::rationals();
    const Matrix m = mat({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(rank(m, f2) == 2);
    CHECK(rank(m, q) == 3);
    std::vector<std::size_t> piv;
    const Matrix e = rref(m, f2, &piv);
    CHECK(e == mat({{1, 0, 1}, {0, 1, 1}}));
    CHECK(piv == std::vector<std::size_t>{0, 1});
    CHECK(in_row_space(e, piv, {Rational(1), Rational(1), Rational(0)}, f2));
    CHECK_FALSE(in_row_space(e, piv, {Rational(0), Rational(0), Rational(1)}, f2));
    CHECK(row_space_contains(e, rref(mat({{1, 1, 0}}), f2), f2));
    CHECK(Field::prime(3).reduce(Rational(-1)) == 2);
    CHECK(Field::prime(3).inv(Rational(2)) == 2);
    CHECK(Field::prime(5).reduce(Rational(1, 2)) == 3);
    CHECK_THROWS_AS(Field::prime(4), PreconditionError);
    CHECK(multiply(mat({{1, 1}}), mat({{1}, {1}}), f2) == mat({{0}}));
}

TEST_CASE("quivers reject cycles and compute the Euler form") {
    CHECK_THROWS_AS(Quiver(2, {{"a", 0, 1}, {"b", 1, 0}}), PreconditionError);
    CHECK_THROWS_AS(Quiver(1, {{"loop", 0, 0}}), PreconditionError);
    CHECK_THROWS_AS(Quiver(2, {{"a", 0, 2}}), PreconditionError);
    const Quiver k = Quiver::kronecker();
    CHECK(euler_form(k, {1, 0}, {0, 1}) == -2);
    CHECK(euler_form(k, {0, 1}, {1, 0}) == 0);
    CHECK(euler_form(k, {1, 1}, {1, 1}) == 0);
    CHECK(euler_form(Quiver::a_n(3), {1, 1, 1}, {1, 1, 1}) == 1);
    CHECK(k.arrow_index("b") == 1);
    CHECK_THROWS_AS(k.arrow_index("c"), PreconditionError);
}

TEST_CASE("dimension vectors") {
    const DimVector a{1, 2}, b{2, 4}, c{1, 0};
    CHECK(proportional(a, b));
    CHECK_FALSE(proportional(a, c));
    CHECK(proportional(DimVector{0, 0}, c));
    CHECK((a + c) == DimVector{2, 2});
    CHECK((b - a) == a);
    CHECK(c.bounded_by(a));
    CHECK_FALSE(a.bounded_by(c));
    CHECK(to_string(a) == "(1,2)");
}

TEST_CASE("representations validate shapes and reduce entries") {
    auto q = a2();
    CHECK_THROWS_AS(QuiverRep(q, Field::prime(2), {1, 1}, {mat({{1, 1}})}), PreconditionError);
    CHECK_THROWS_AS(QuiverRep(q, Field::prime(2), {1, 1}, {}), PreconditionError);
    const QuiverRep p(q, Field::prime(2), {1, 1}, {mat({{3}})});
    CHECK(p.map(0) == mat({{1}}));
    const QuiverRep s = direct_sum(QuiverRep::simple(q, Field::prime(2), 0), QuiverRep::simple(q, Field::prime(2), 1));
    CHECK(s.dims() == DimVector{1, 1});
    CHECK(s.map(0).is_zero());
    CHECK_FALSE(s == p);
}

TEST_CASE("submodules, quotients and lifts") {
    auto q = a2();
    const Field f = Field::prime(2);
    const QuiverRep p(q, f, {1, 1}, {mat({{1}})});
    const Submodule s2 = span_submodule(p, {Matrix(0, 1), mat({{1}})});
    CHECK(is_invariant(p, s2));
    CHECK(s2.dims() == DimVector{0, 1});
    const Submodule s1 = span_submodule(p, {mat({{1}}), Matrix(0, 1)});
    CHECK_FALSE(is_invariant(p, s1));
    CHECK_THROWS_AS(quotient(p, s1), PreconditionError);

    const QuiverRep qt = quotient(p, s2);
    CHECK(qt == QuiverRep::simple(q, f, 0));
    CHECK(subrepresentation(p, s2) == QuiverRep::simple(q, f, 1));
    CHECK(contains(p, Submodule::whole(p), s2));
    CHECK_FALSE(contains(p, s2, Submodule::whole(p)));
    CHECK(lift_from_quotient(p, s2, Submodule::whole(qt)) == Submodule::whole(p));
    CHECK(lift_from_quotient(p, s2, Submodule::zero(qt)) == s2);
    const QuiverRep sub = subrepresentation(p, s2);
    CHECK(push_from_sub(p, s2, Submodule::whole(sub)) == s2);
}

TEST_CASE("hom and ext dimensions") {
    auto q = a2();
    const Field f = Field::prime(2);
    const QuiverRep s1 = QuiverRep::simple(q, f, 0), s2 = QuiverRep::simple(q, f, 1);
    const QuiverRep p(q, f, {1, 1}, {mat({{1}})});
    CHECK(hom_dim(s1, p) == 0);
    CHECK(hom_dim(p, s1) == 1);
    CHECK(hom_dim(s2, p) == 1);
    CHECK(hom_dim(p, p) == 1);
    CHECK(ext1_dim(s1, s2) == 1);
    CHECK(ext1_dim(s2, s1) == 0);
    CHECK(ext1_dim(p, p) == 0);

    auto k = std::make_shared<const Quiver>(Quiver::kronecker());
    const Field f3 = Field::prime(3);
    const QuiverRep r(k, f3, {1, 1}, {mat({{1}}), mat({{0}})});
    const QuiverRep r2(k, f3, {1, 1}, {mat({{0}}), mat({{1}})});
    CHECK(hom_dim(r, r) == 1);
    CHECK(hom_dim(r, r2) == 0);
    CHECK(ext1_dim(r, r) == 1);
}
