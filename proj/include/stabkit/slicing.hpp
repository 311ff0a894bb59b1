#pragma once

// The hereditary derived model: an object is a finite direct sum of shifted
// representations, sum_k M_k[k]. For path algebras of acyclic quivers every
// object of the bounded derived category is of this form up to isomorphism,
// so a slicing decomposition is the concatenation of per-degree HN
// filtrations with phases offset by the shift.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stabkit/gltilde.hpp"
#include "stabkit/stability.hpp"

namespace stab {

class FormalComplex {
public:
    FormalComplex() = default;
    static FormalComplex of(QuiverRep m, long shift = 0);

    // Adds M[shift]; direct-sums with an existing part; zero modules are dropped.
    void add_part(long shift, const QuiverRep& m);

    const std::map<long, QuiverRep>& parts() const noexcept { return parts_; }
    bool is_zero() const noexcept { return parts_.empty(); }
    // sum_k (-1)^k [M_k]
    DimVector klass() const;
    FormalComplex shifted(long n) const;

    friend FormalComplex direct_sum(const FormalComplex& a, const FormalComplex& b);
    friend bool operator==(const FormalComplex&, const FormalComplex&) = default;

private:
    std::map<long, QuiverRep> parts_;
};

// The slicing of the stability condition (heart charge, relabel): P(phi) for
// phi in (0, 1] are the heart-semistable modules of that phase, extended by
// P(phi + 1) = P(phi)[1], then relabelled by the GL~ element.
struct SlicingView {
    CentralCharge heart;
    GLtildeElement relabel = GLtildeElement::identity();

    // Phase of a heart-semistable module of class `cls` placed in degree `shift`.
    PhaseKey phase_of(const DimVector& cls, long shift) const;
};

struct SliceFactor {
    long shift;
    QuiverRep factor;
    DimVector cls;  // class of the module (before the shift sign)
    PhaseKey phase;
};

// Factors in strictly descending phase order.
std::vector<SliceFactor> hn_decompose(const FormalComplex& fc, const SlicingView& s, EnumerationOptions opts = {});

struct PhaseBounds {
    PhaseKey minus;
    PhaseKey plus;
};

PhaseBounds phi_bounds(const FormalComplex& fc, const SlicingView& s, EnumerationOptions opts = {});

struct Endpoint {
    PhaseKey value;
    bool closed;
};

struct PhaseInterval {
    Endpoint lower;
    Endpoint upper;
};

// P(I) membership via lower < phi^- <= phi^+ < upper (closedness per endpoint).
// The zero object belongs to every P(I).
bool in_interval(const FormalComplex& fc, const SlicingView& s, const PhaseInterval& interval,
                 EnumerationOptions opts = {});

struct TestObject {
    std::string name;
    FormalComplex object;
};

struct SlicingDistanceRow {
    std::string name;
    PhaseBounds first;
    PhaseBounds second;
    PhaseKey distance;  // max(|d phi^-|, |d phi^+|)
};

// Finite-testset version of the slicing metric; a lower bound for the sup
// over all objects. Zero objects are skipped.
struct SlicingDistance {
    PhaseKey exact;
    double value = 0;
    bool lower_bound = true;
    std::vector<SlicingDistanceRow> rows;
};

SlicingDistance slicing_distance(const SlicingView& p, const SlicingView& q, const std::vector<TestObject>& testset,
                                 EnumerationOptions opts = {});

struct ContainmentRow {
    std::string name;
    bool semistable_in_q = false;
    std::optional<PhaseKey> phase_in_q;
    std::optional<PhaseBounds> bounds_in_p;
    AngleOrder upper = AngleOrder::equal;  // (phi^+_P - phi) vs eps
    AngleOrder lower = AngleOrder::equal;  // (phi - phi^-_P) vs eps
};

struct ContainmentReport {
    bool holds = true;       // no member of Q(phi) leaves P([phi - eps, phi + eps])
    bool certified = true;   // every comparison was decided exactly or outside the guard band
    std::vector<ContainmentRow> rows;
};

// Checks Q(phi) c P([phi - eps, phi + eps]) on the Q-semistable members of
// the testset; other members are listed but not tested.
ContainmentReport containment_check(const SlicingView& p, const SlicingView& q, const Rational& eps,
                                    const std::vector<TestObject>& testset, EnumerationOptions opts = {});

}  // namespace stab
