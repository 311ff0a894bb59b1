#include <doctest.h>

#include <omp.h>

#include <random>

#include "fuzz_support.hpp"
#include "stabkit/enumerate.hpp"
#include "stabkit/errors.hpp"

using namespace stab;

TEST_CASE("subspace counts are Gaussian binomial sums") {
    CHECK(subspace_count(2, 0) == 1);
    CHECK(subspace_count(2, 1) == 2);
    CHECK(subspace_count(2, 2) == 5);
    CHECK(subspace_count(2, 3) == 16);
    CHECK(subspace_count(3, 2) == 6);
    CHECK(subspace_count(3, 3) == 28);
    for (int p : {2, 3}) {
        for (std::size_t d = 0; d <= 4; ++d) CHECK(fuzz::all_subspaces_by_closure(p, d).size() == subspace_count(p, d));
    }
}

TEST_CASE("zero maps: every tuple of subspaces is a submodule") {
    auto q = std::make_shared<const Quiver>(Quiver::a_n(3));
    const QuiverRep r(q, Field::prime(2), {2, 1, 1}, {Matrix(1, 2), Matrix(1, 1)});
    const auto subs = enumerate_submodules(r);
    CHECK(subs.size() == 5 * 2 * 2);
    CHECK(subs.front() == Submodule::zero(r));
    CHECK(all_ses(r).size() == subs.size() - 2);
}

TEST_CASE("cap and field checks") {
    auto q = std::make_shared<const Quiver>(Quiver::a_n(2));
    const QuiverRep big(q, Field::prime(2), {4, 3}, {Matrix(3, 4)});
    CHECK_THROWS_AS(enumerate_submodules(big), PreconditionError);
    CHECK_NOTHROW(enumerate_submodules(big, {8}));
    const QuiverRep overq(q, Field::rationals(), {1, 1}, {Matrix(1, 1)});
    CHECK_THROWS_AS(enumerate_submodules(overq), PreconditionError);
}

TEST_CASE("parallel enumeration equals the serial reference and the oracle") {
    std::mt19937_64 rng(2024);
    for (int threads : {1, 2, 4}) {
        omp_set_num_threads(threads);
        for (int i = 0; i < 60; ++i) {
            const auto inst = fuzz::random_instance(rng, 5);
            const auto par = enumerate_submodules(inst.rep);
            const auto ser = enumerate_submodules_serial(inst.rep);
            REQUIRE(par == ser);
            CHECK(par.size() == fuzz::oracle_semistable(inst.rep, inst.charge).submodules);
            for (const auto& s : par) CHECK(is_invariant(inst.rep, s));
        }
    }
}
