#pragma once

// Stability functions on the category of quiver representations:
// semistability, Harder-Narasimhan filtrations (two independent algorithms),
// masses, and discreteness of the charge image.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stabkit/enumerate.hpp"
#include "stabkit/exactnum.hpp"
#include "stabkit/quiver.hpp"

namespace stab {

// Z(a) = sum_i a_i z_i for an arbitrary homomorphism Z^n -> C.
ExactComplex evaluate(std::span<const ExactComplex> values, const DimVector& a);

// A stability function: every z_i lies in the strict upper half-plane.
class CentralCharge {
public:
    explicit CentralCharge(std::vector<ExactComplex> values);

    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<ExactComplex>& values() const noexcept { return values_; }
    const ExactComplex& operator[](std::size_t i) const { return values_[i]; }
    ExactComplex operator()(const DimVector& a) const { return evaluate(values_, a); }
    // The radicand shared by all entries (1 when all are rational).
    long radicand() const;

    friend bool operator==(const CentralCharge&, const CentralCharge&) = default;

private:
    std::vector<ExactComplex> values_;
};

// Phase of a class: (0, dir = Z(a)) for classes landing in the strict upper
// half-plane (all module classes), the principal phase in (-1, 1] otherwise.
PhaseKey phase(const DimVector& a, const CentralCharge& z);

struct SemistabilityCertificate {
    bool semistable = false;
    // First violator in canonical enumeration order; set iff unstable.
    std::optional<Submodule> witness;
    // Over Q no enumeration happens: the verdict comes from the dimension
    // vectors bounded by the class alone.
    bool by_dimension_vectors = false;
};

SemistabilityCertificate is_semistable(const QuiverRep& rep, const CentralCharge& z, EnumerationOptions opts = {});

struct HNFiltration {
    std::vector<Submodule> chain;  // 0 = E_0 c E_1 c ... c E_n = E
    std::vector<QuiverRep> factors;
    std::vector<DimVector> classes;
    std::vector<PhaseKey> phases;  // strictly descending

    std::size_t length() const noexcept { return factors.size(); }
    friend bool operator==(const HNFiltration& a, const HNFiltration& b) { return a.chain == b.chain; }
};

// Maximal-phase subobject of maximal dimension, then recursion on the quotient.
HNFiltration hn_filtration_max_sub(const QuiverRep& rep, const CentralCharge& z, EnumerationOptions opts = {});
// Maximally destabilising quotients peeled off from the top.
HNFiltration hn_filtration_mdq(const QuiverRep& rep, const CentralCharge& z, EnumerationOptions opts = {});

struct Mass {
    double value = 0;
    double error_bound = 0;  // absolute
};

// Sum of |Z(A_i)| over the given factor charges.
Mass mass(std::span<const ExactComplex> factor_charges);
Mass mass(const HNFiltration& hn, const CentralCharge& z);

struct DiscretenessReport {
    bool discrete = false;
    long radicand = 1;
    // Z-basis of the image, each vector written as (re_rat, re_surd, im_rat, im_surd).
    std::vector<std::vector<Rational>> z_basis;
    std::size_t rank_over_z = 0;
    std::size_t rank_over_r = 0;
    std::string explanation;
};

DiscretenessReport check_discreteness(const CentralCharge& z);

}  // namespace stab
