#pragma once

// Walls along affine charge paths Z_t = (1 - t) Z_0 + t Z_1, t in [0, 1]:
// parameters where the charges of two tracked classes become aligned.

#include <optional>
#include <string>
#include <vector>

#include "stabkit/stability.hpp"

namespace stab {

struct ChargePath {
    std::vector<ExactComplex> start;  // rational entries
    std::vector<ExactComplex> end;

    // Entrywise in the strict upper half-plane at both endpoints; the region is
    // convex, so this covers the whole segment.
    void validate() const;
    std::vector<ExactComplex> at(const Rational& t) const;
    CentralCharge charge_at(const Rational& t) const { return CentralCharge(at(t)); }
};

// t = p/q + (a/b) sqrt(disc), disc squarefree; a = 0 for rational roots.
struct WallRoot {
    Integer p{0}, q{1}, a{0}, b{1};
    long disc = 1;

    QuadScalar value() const;
    double to_double() const { return value().to_double(); }
    bool is_rational() const { return a == 0; }
};

struct ClassPair {
    DimVector alpha;
    DimVector beta;
    std::string tracked;  // representation the pair came from, empty for explicit pairs
};

struct FlipEvidence {
    std::optional<Rational> left;   // rational sample just before the wall
    std::optional<Rational> right;  // and just after
    int cross_left = 0;             // sign of cross(Z_t(alpha), Z_t(beta))
    int cross_right = 0;
    std::optional<bool> semistable_left;  // verdicts for the tracked rep
    std::optional<bool> semistable_right;
};

struct WallEvent {
    WallRoot t;
    ClassPair pair;
    bool tangent = false;  // double root: the pair touches alignment without crossing
    FlipEvidence evidence;
};

struct WallSearch {
    std::vector<WallEvent> walls;       // sorted by t, then by pair
    std::vector<ClassPair> degenerate;  // cross identically zero along the path
};

// Representations referenced by ClassPair::tracked, looked up by name.
struct TrackedRep {
    std::string name;
    QuiverRep rep;
};

WallSearch find_walls(const ChargePath& path, const std::vector<ClassPair>& pairs,
                      const std::vector<TrackedRep>& tracked = {}, EnumerationOptions opts = {});

// (c, dims(M)) for every proper nonzero sub-dimension vector c of each tracked
// rep that is not proportional to dims(M).
std::vector<ClassPair> auto_pairs(const std::vector<TrackedRep>& tracked, EnumerationOptions opts = {});

struct PolyRoot {
    WallRoot t;
    bool double_root = false;
};

// Exact roots in [0, 1] of c0 + c1 t + c2 t^2 (not identically zero), ascending.
std::vector<PolyRoot> roots_in_unit_interval(const Rational& c0, const Rational& c1, const Rational& c2);

// Exact order of two roots, possibly from different quadratic fields.
int compare(const WallRoot& x, const WallRoot& y);

}  // namespace stab
