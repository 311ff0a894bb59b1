#include "stabkit/gltilde.hpp"

#include "stabkit/errors.hpp"

namespace stab {

namespace {

const ExactComplex kReference(0, 1);

long floor_div2(long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

// Direction i has phase 1/2; -1/2 is PhaseKey(-1, i).
const PhaseKey& minus_half() {
    static const PhaseKey p(-1, kReference);
    return p;
}

const PhaseKey& plus_half() {
    static const PhaseKey p(0, kReference);
    return p;
}

}  // namespace

Mat2 Mat2::inverse() const {
    const Rational det_ = det();
    if (det_ == 0) throw PreconditionError("singular 2x2 matrix");
    return {d / det_, -b / det_, -c / det_, a / det_};
}

ExactComplex Mat2::apply(const ExactComplex& z) const {
    return {QuadScalar(a) * z.re + QuadScalar(b) * z.im, QuadScalar(c) * z.re + QuadScalar(d) * z.im};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::string to_string(const Mat2& m) {
    return "[[" + to_string(m.a) + "," + to_string(m.b) + "],[" + to_string(m.c) + "," + to_string(m.d) + "]]";
}

GLtildeElement::GLtildeElement(Mat2 t, long branch) : t_(std::move(t)), m_(branch) {
    if (t_.det() <= 0) {
        throw PreconditionError("GL~(2,R) element needs det(T) > 0, got det " + to_string(t_.det()));
    }
    t_inv_ = t_.inverse();
}

PhaseKey GLtildeElement::anchor(const Mat2& t_inv, long branch) {
    const PhaseKey p0 = PhaseKey::principal(t_inv.apply(kReference));  // in (-1, 1]
    const PhaseKey base = p0 > minus_half() ? p0 : p0 + 2;               // in (-1/2, 3/2]
    return base + 2 * branch;
}

PhaseKey GLtildeElement::reference_phase() const { return anchor(t_inv_, m_); }

PhaseKey GLtildeElement::relabel(const PhaseKey& old) const {
    const long j = floor_div2((old - plus_half()).floor());
    const PhaseKey delta = ccw_displacement(t_inv_.apply(kReference), t_inv_.apply(old.direction()));
    return reference_phase() + 2 * j + delta;
}

GLtildeElement GLtildeElement::inverse() const {
    const GLtildeElement candidate(t_inv_, 0);
    const GLtildeElement c = compose(*this, candidate);
    return GLtildeElement(t_inv_, -c.branch());
}

GLtildeElement compose(const GLtildeElement& g1, const GLtildeElement& g2) {
    const Mat2 t = g2.matrix() * g1.matrix();
    const PhaseKey target = g1.relabel(g2.reference_phase());
    const PhaseKey diff = target - GLtildeElement(t, 0).reference_phase();
    if (!diff.is_integer() || diff.floor() % 2 != 0) {
        throw InvariantViolation("composed anchor differs from the branch-0 anchor by a non-even offset");
    }
    return GLtildeElement(t, diff.floor() / 2);
}

}  // namespace stab
