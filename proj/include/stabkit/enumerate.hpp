#pragma once

// Exhaustive submodule enumeration over F_p.
//
// Each vertex space F_p^d is enumerated in canonical order (rank ascending,
// then pivot sets lexicographically, then free entries as base-p odometer
// with the first free entry most significant). Vertex subspaces are chosen
// in vertex order 0..n-1 and a partial tuple is cut as soon as an arrow with
// both endpoints chosen fails invariance. The resulting list is ordered
// lexicographically by the per-vertex canonical indices.
//
// `enumerate_submodules` parallelises over the candidates at vertex 0 with
// OpenMP; `enumerate_submodules_serial` is the reference it is tested against.
// Both return identical lists.

#include <cstddef>
#include <vector>

#include "stabkit/quiver.hpp"

namespace stab {

inline constexpr long kDefaultDimensionCap = 6;

struct EnumerationOptions {
    long cap = kDefaultDimensionCap;
};

std::vector<Submodule> enumerate_submodules(const QuiverRep& rep, EnumerationOptions opts = {});
std::vector<Submodule> enumerate_submodules_serial(const QuiverRep& rep, EnumerationOptions opts = {});

struct ShortExactSequence {
    Submodule sub;
    QuiverRep quotient;
};

// One entry per proper nonzero submodule, in enumeration order.
std::vector<ShortExactSequence> all_ses(const QuiverRep& rep, EnumerationOptions opts = {});

// Number of subspaces of F_p^d (sum of Gaussian binomials); exposed for tests.
std::size_t subspace_count(int p, std::size_t d);

}  // namespace stab
