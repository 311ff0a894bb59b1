#pragma once

// Numerical stability conditions on an elliptic curve. Classes are (rank,
// degree); a numerical charge is a 2x2 rational matrix M sending (r, d) to
// (Re Z, Im Z). Every such condition is g . sigma_std for a unique g in
// GL~(2,R).

#include <optional>
#include <string>

#include "stabkit/gltilde.hpp"

namespace stab::curve {

struct NumClass {
    long r = 0;
    long d = 0;
    friend bool operator==(const NumClass&, const NumClass&) = default;
};

long euler_form(const NumClass& a, const NumClass& b);
ExactComplex std_charge(const NumClass& c);
ExactComplex apply(const Mat2& m, const NumClass& c);

// (r, d) -> (-d, r)
Mat2 standard_matrix();

// A numerical stability condition reduced to its checkable data: the charge
// matrix and the phase of the skyscraper class (0, 1), which fixes the branch.
struct NumericalCondition {
    Mat2 m;
    PhaseKey skyscraper_phase;
};

NumericalCondition standard_condition();
NumericalCondition act_on_standard(const GLtildeElement& g);

// Phase of a class of nonzero charge under the condition.
PhaseKey phase(const NumericalCondition& c, const NumClass& cls);

// The g with M = T^{-1} M_std. Without an explicit skyscraper phase the branch
// is chosen so that (0, 1) lands in (0, 2]. Throws on singular or
// orientation-reversing M, and on a skyscraper phase whose direction
// disagrees with M.
GLtildeElement classify(const Mat2& m, const std::optional<PhaseKey>& skyscraper_phase = std::nullopt);
GLtildeElement classify(const NumericalCondition& c);

struct IntMat2 {
    Integer a{1}, b{0}, c{0}, d{1};
    Integer det() const { return a * d - b * c; }
    friend IntMat2 operator*(const IntMat2& x, const IntMat2& y);
    friend bool operator==(const IntMat2&, const IntMat2&) = default;
};

struct Reduction {
    IntMat2 gamma;         // tau_reduced = (a tau + b) / (c tau + d)
    std::string word;      // generators applied left to right, e.g. "T^-5 S"
    ExactComplex tau;      // image point before reduction
    ExactComplex reduced;  // in |Re| <= 1/2, |tau| >= 1
    ExactComplex scale;    // the second basis vector after reduction
    long branch = 0;
};

// tau = w1 / w2 with w1 = T^{-1}(0, 1), w2 = T^{-1}(1, 0).
ExactComplex tau_of(const GLtildeElement& g);
Reduction modular_reduce(const GLtildeElement& g);
Reduction modular_reduce(const ExactComplex& w1, const ExactComplex& w2);

bool in_fundamental_domain(const ExactComplex& tau);

}  // namespace stab::curve
