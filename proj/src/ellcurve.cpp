#include "stabkit/ellcurve.hpp"

#include "stabkit/errors.hpp"

namespace stab::curve {

namespace {

Integer floor_of(const Rational& x) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return out;
}

const Rational& rat(const QuadScalar& x) { return x.rational_part(); }

bool effective(const NumClass& c) { return c.r > 0 || (c.r == 0 && c.d > 0); }

}  // namespace

long euler_form(const NumClass& a, const NumClass& b) { return a.r * b.d - b.r * a.d; }

ExactComplex std_charge(const NumClass& c) { return {QuadScalar(-c.d), QuadScalar(c.r)}; }

ExactComplex apply(const Mat2& m, const NumClass& c) {
    return {QuadScalar(Rational(m.a * c.r + m.b * c.d)), QuadScalar(Rational(m.c * c.r + m.d * c.d))};
}

Mat2 standard_matrix() { return {0, -1, 1, 0}; }

NumericalCondition standard_condition() { return {standard_matrix(), PhaseKey::integer(1)}; }

NumericalCondition act_on_standard(const GLtildeElement& g) {
    return {g.matrix().inverse() * standard_matrix(), g.relabel(PhaseKey::integer(1))};
}

PhaseKey phase(const NumericalCondition& c, const NumClass& cls) {
    if (!effective(cls)) throw PreconditionError("phases are defined here for effective classes only");
    return classify(c).relabel(PhaseKey::principal(std_charge(cls)));
}

GLtildeElement classify(const Mat2& m, const std::optional<PhaseKey>& skyscraper_phase) {
    const Rational det = m.det();
    if (det == 0) throw PreconditionError("degenerate numerical charge: det(M) = 0");
    if (det < 0) {
        throw PreconditionError("orientation-reversing numerical charge (det(M) = " + to_string(det) +
                                "); stability conditions on the curve have orientation-preserving charges");
    }
    const Mat2 t = standard_matrix() * m.inverse();
    const PhaseKey p0 = GLtildeElement(t, 0).relabel(PhaseKey::integer(1));
    if (skyscraper_phase) {
        const ExactComplex z = apply(m, NumClass{0, 1});
        const ExactComplex dir = skyscraper_phase->direction();
        if (!cross(dir, z).is_zero() || sign(dot(dir, z)) <= 0) {
            throw PreconditionError("skyscraper phase does not match the direction of Z(0, 1)");
        }
        const PhaseKey diff = *skyscraper_phase - p0;
        if (!diff.is_integer() || diff.floor() % 2 != 0) {
            throw InvariantViolation("skyscraper phase differs from the branch-0 value by a non-even amount");
        }
        return GLtildeElement(t, diff.floor() / 2);
    }
    long branch = 0;
    while (p0 + 2 * branch <= PhaseKey::integer(0)) ++branch;
    while (p0 + 2 * branch > PhaseKey::integer(2)) --branch;
    return GLtildeElement(t, branch);
}

GLtildeElement classify(const NumericalCondition& c) { return classify(c.m, c.skyscraper_phase); }

IntMat2 operator*(const IntMat2& x, const IntMat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

ExactComplex tau_of(const GLtildeElement& g) {
    return g.act_on_charge({QuadScalar(0), QuadScalar(1)}) / g.act_on_charge({QuadScalar(1), QuadScalar(0)});
}

bool in_fundamental_domain(const ExactComplex& tau) {
    const Rational re = rat(tau.re);
    return sign(tau.im) > 0 && 2 * re <= 1 && 2 * re >= -1 && rat(tau.norm2()) >= 1;
}

Reduction modular_reduce(const ExactComplex& w1_in, const ExactComplex& w2_in) {
    if (!w1_in.is_rational() || !w2_in.is_rational()) throw PreconditionError("modular reduction needs rational input");
    ExactComplex w1 = w1_in, w2 = w2_in;
    Reduction out;
    out.tau = w1 / w2;
    if (sign(out.tau.im) <= 0) throw PreconditionError("basis is not positively oriented");
    std::string word;
    auto emit = [&word](const std::string& g) { word += (word.empty() ? "" : " ") + g; };

    for (int iter = 0;; ++iter) {
        if (iter > 100000) throw InvariantViolation("modular reduction did not terminate");
        const ExactComplex tau = w1 / w2;
        const Integer n = floor_of(rat(tau.re) + Rational(1, 2));
        if (n != 0) {
            w1 = w1 - QuadScalar(Rational(n)) * w2;
            out.gamma = IntMat2{1, -n, 0, 1} * out.gamma;
            emit("T^" + Integer(-n).get_str());
            continue;
        }
        if (rat(tau.norm2()) < 1) {
            const ExactComplex old1 = w1;
            w1 = -w2;
            w2 = old1;
            out.gamma = IntMat2{0, -1, 1, 0} * out.gamma;
            emit("S");
            continue;
        }
        out.reduced = tau;
        break;
    }
    out.word = word.empty() ? "id" : word;
    out.scale = w2;
    return out;
}

Reduction modular_reduce(const GLtildeElement& g) {
    Reduction r = modular_reduce(g.act_on_charge({QuadScalar(0), QuadScalar(1)}),
                                 g.act_on_charge({QuadScalar(1), QuadScalar(0)}));
    r.branch = g.branch();
    return r;
}

}  // namespace stab::curve
