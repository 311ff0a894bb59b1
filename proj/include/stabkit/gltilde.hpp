#pragma once

// Elements of the universal cover of GL+(2,R) with rational matrix part.
//
// An element (T, m) acts on a stability condition by Z' = T^{-1} Z and by
// relabelling phases. The relabelling is pinned by an anchor: the reference
// direction i (phase 1/2) is sent to the unique phase with direction
// T^{-1}(i) in (2m - 1/2, 2m + 3/2]. An object of old phase
// 1/2 + 2j + delta (delta in [0, 2)) receives
//     anchor + 2j + ccw_displacement(T^{-1} i, T^{-1} Z(E)),
// which is increasing, commutes with +1, and is computed exactly.

#include <string>

#include "stabkit/exactnum.hpp"

namespace stab {

struct Mat2 {
    Rational a{1}, b{0}, c{0}, d{1};  // [[a, b], [c, d]]

    static Mat2 identity() { return {}; }
    static Mat2 scalar(const Rational& s) { return {s, 0, 0, s}; }

    Rational det() const { return a * d - b * c; }
    Mat2 inverse() const;
    // Identifies C with R^2 via (re, im).
    ExactComplex apply(const ExactComplex& z) const;

    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

std::string to_string(const Mat2& m);

class GLtildeElement {
public:
    // det(t) > 0 is required.
    GLtildeElement(Mat2 t, long branch);

    static GLtildeElement identity() { return {Mat2::identity(), 0}; }
    // Z' = -Z with every phase raised by one.
    static GLtildeElement shift() { return {Mat2::scalar(-1), 0}; }

    const Mat2& matrix() const noexcept { return t_; }
    long branch() const noexcept { return m_; }

    ExactComplex act_on_charge(const ExactComplex& z) const { return t_inv_.apply(z); }
    PhaseKey reference_phase() const;
    PhaseKey relabel(const PhaseKey& old) const;

    GLtildeElement inverse() const;

    friend bool operator==(const GLtildeElement& x, const GLtildeElement& y) {
        return x.t_ == y.t_ && x.m_ == y.m_;
    }

private:
    static PhaseKey anchor(const Mat2& t_inv, long branch);

    Mat2 t_;
    Mat2 t_inv_;
    long m_;
};

// The element acting as g2 followed by g1:
// act(act(s, g2), g1) == act(s, compose(g1, g2)). Matrix part T2 * T1.
GLtildeElement compose(const GLtildeElement& g1, const GLtildeElement& g2);

}  // namespace stab
