// Serial reference vs OpenMP submodule enumeration on representations at the
// dimension cap.

#include <benchmark/benchmark.h>

#include <memory>

#include "stabkit/enumerate.hpp"

namespace {

using namespace stab;

// Kronecker module k^3 => k^3 with maps I and a nilpotent Jordan block:
// a large but structured submodule lattice.
QuiverRep kronecker_33(int p) {
    auto q = std::make_shared<const Quiver>(Quiver::kronecker());
    Matrix jordan(3, 3);
    jordan(0, 1) = 1;
    jordan(1, 2) = 1;
    return QuiverRep(q, Field::prime(p), DimVector({3, 3}), {Matrix::identity(3), jordan});
}

// A3 with dims (2, 2, 2) and zero maps: every tuple of subspaces is a submodule.
QuiverRep a3_zero(int p) {
    auto q = std::make_shared<const Quiver>(Quiver::a_n(3));
    return QuiverRep(q, Field::prime(p), DimVector({2, 2, 2}), {Matrix(2, 2), Matrix(2, 2)});
}

void BM_Serial(benchmark::State& state, QuiverRep (*make)(int)) {
    const QuiverRep rep = make(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_submodules_serial(rep));
}

void BM_Parallel(benchmark::State& state, QuiverRep (*make)(int)) {
    const QuiverRep rep = make(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_submodules(rep));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Serial, kronecker_33, kronecker_33)->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(BM_Parallel, kronecker_33, kronecker_33)->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(BM_Serial, a3_zero, a3_zero)->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(BM_Parallel, a3_zero, a3_zero)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
