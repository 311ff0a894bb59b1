#pragma once

// Stability conditions on D^b(rep Q) that are reachable from the module heart
// by the GL~(2,R) action, the finite-testset norm and metric, heart-preserving
// deformations and axiom validation.

#include <optional>
#include <string>
#include <vector>

#include "stabkit/gltilde.hpp"
#include "stabkit/slicing.hpp"

namespace stab {

// sigma = g . (Z0, module heart): charge T^{-1} Z0, phases relabelled by g.
class StabilityCondition {
public:
    explicit StabilityCondition(CentralCharge heart, GLtildeElement action = GLtildeElement::identity())
        : heart_(std::move(heart)), action_(std::move(action)) {}

    const CentralCharge& heart_charge() const noexcept { return heart_; }
    const GLtildeElement& action() const noexcept { return action_; }
    SlicingView slicing() const { return {heart_, action_}; }

    ExactComplex charge(const DimVector& cls) const { return action_.act_on_charge(heart_(cls)); }
    std::vector<ExactComplex> charge_values() const;

    friend bool operator==(const StabilityCondition& a, const StabilityCondition& b) {
        return a.heart_ == b.heart_ && a.action_ == b.action_;
    }

private:
    CentralCharge heart_;
    GLtildeElement action_;
};

// Sum of |Z_sigma(A_i)| over the HN factors of the object.
Mass mass(const FormalComplex& fc, const StabilityCondition& s, EnumerationOptions opts = {});

struct GlActRow {
    std::string name;
    bool semistable_before = false;
    bool semistable_after = false;
    std::optional<PhaseKey> phase_before;
    std::optional<PhaseKey> phase_after;
};

struct GlActResult {
    StabilityCondition sigma;
    std::vector<GlActRow> rows;
};

StabilityCondition act(const StabilityCondition& s, const GLtildeElement& g);
GlActResult gl_act(const StabilityCondition& s, const GLtildeElement& g, const std::vector<TestObject>& testset,
                   EnumerationOptions opts = {});

struct NormRow {
    std::string name;
    double ratio = 0;
};

struct NormReport {
    double value = 0;
    double error_bound = 0;
    bool lower_bound = true;
    std::vector<NormRow> rows;
    std::vector<std::string> skipped;  // not sigma-semistable
};

// max |U([E])| / |Z([E])| over the sigma-semistable members of the testset.
NormReport norm_sigma(const std::vector<ExactComplex>& u, const StabilityCondition& s,
                      const std::vector<TestObject>& testset, EnumerationOptions opts = {});

struct StabDistanceRow {
    std::string name;
    PhaseKey phase_term;  // max(|d phi^-|, |d phi^+|)
    double log_mass_ratio = 0;
};

struct StabDistance {
    double value = 0;
    bool lower_bound = true;
    std::vector<StabDistanceRow> rows;
};

StabDistance stab_distance(const StabilityCondition& a, const StabilityCondition& b,
                           const std::vector<TestObject>& testset, EnumerationOptions opts = {});

// Certified enclosure of sin^2(pi eps): lower <= sin^2(pi eps) <= upper,
// with a relative width of 2^-29.
struct SinSquaredBounds {
    Rational lower;
    Rational upper;
};

SinSquaredBounds sin_squared_bounds(const Rational& eps);

struct HypothesisRow {
    std::string name;
    DimVector cls;
    double margin = 0;       // sin(pi eps)|Z| - |W - Z|, advisory
    bool boundary = false;   // within the guard band; rejected conservatively
    bool holds = false;
};

struct DriftRow {
    std::string name;
    PhaseBounds before;
    PhaseBounds after;
    PhaseKey drift;
};

struct DeformReport {
    Rational eps;
    std::vector<HypothesisRow> hypothesis;
    std::vector<DriftRow> conclusion;
    PhaseKey d_testset = PhaseKey::integer(0);
    double d_float = 0;
};

struct DeformResult {
    StabilityCondition tau;
    DeformReport report;
};

// Heart-preserving deformation. The hypothesis |W(F) - Z(F)| < sin(pi eps)|Z(F)|
// is checked for every class 0 < F <= dims(M_k) of every testset part, which
// covers all semistable subquotients that can occur in the HN filtrations of
// the testset under either charge. Throws PreconditionError naming the first
// violating object, HeartChangeUnsupported if W leaves the half-plane, and
// InvariantViolation if the conclusion d < eps fails.
DeformResult deform(const StabilityCondition& s, const CentralCharge& w, const Rational& eps,
                    const std::vector<TestObject>& testset, EnumerationOptions opts = {});
// Same, with the charge values unchecked so heart changes can be reported.
DeformResult deform(const StabilityCondition& s, const std::vector<ExactComplex>& w, const Rational& eps,
                    const std::vector<TestObject>& testset, EnumerationOptions opts = {});

struct AxiomViolation {
    char axiom;  // 'a' .. 'd'
    std::string detail;
};

struct AxiomReport {
    std::size_t checked_a = 0, checked_b = 0, checked_c = 0, checked_d = 0;
    std::vector<AxiomViolation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

struct PhaseLabel {
    std::string name;
    DimVector cls;  // signed class of the object
    PhaseKey phase;
};

// Axiom (a) on explicit labels: Z(E) must be a positive multiple of exp(i pi phi).
void check_phase_labels(const StabilityCondition& s, const std::vector<PhaseLabel>& labels, AxiomReport& report);

AxiomReport validate_axioms(const StabilityCondition& s, const std::vector<TestObject>& testset,
                            EnumerationOptions opts = {});

}  // namespace stab
