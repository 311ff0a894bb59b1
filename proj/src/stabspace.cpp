#include "stabkit/stabspace.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "stabkit/errors.hpp"

namespace stab {

namespace {

bool semistable_object(const FormalComplex& fc, const SlicingView& s, EnumerationOptions opts) {
    return !fc.is_zero() && hn_decompose(fc, s, opts).size() == 1;
}

PhaseKey phase_distance(const PhaseBounds& a, const PhaseBounds& b) {
    const PhaseKey dm = abs(a.minus - b.minus);
    const PhaseKey dp = abs(a.plus - b.plus);
    return dm > dp ? dm : dp;
}

// Every class 0 < c <= dims, in lexicographic order.
void bounded_classes(const DimVector& dims, std::set<DimVector>& out) {
    DimVector c(dims.size());
    for (;;) {
        std::size_t i = 0;
        while (i < dims.size() && c[i] == dims[i]) c[i++] = 0;
        if (i == dims.size()) return;
        ++c[i];
        out.insert(c);
    }
}

}  // namespace

std::vector<ExactComplex> StabilityCondition::charge_values() const {
    std::vector<ExactComplex> out;
    out.reserve(heart_.size());
    for (const auto& z : heart_.values()) out.push_back(action_.act_on_charge(z));
    return out;
}

Mass mass(const FormalComplex& fc, const StabilityCondition& s, EnumerationOptions opts) {
    std::vector<ExactComplex> charges;
    for (const auto& f : hn_decompose(fc, s.slicing(), opts)) charges.push_back(s.charge(f.cls));
    return mass(charges);
}

StabilityCondition act(const StabilityCondition& s, const GLtildeElement& g) {
    return StabilityCondition(s.heart_charge(), compose(g, s.action()));
}

GlActResult gl_act(const StabilityCondition& s, const GLtildeElement& g, const std::vector<TestObject>& testset,
                   EnumerationOptions opts) {
    GlActResult out{act(s, g), {}};
    for (const auto& t : testset) {
        GlActRow row;
        row.name = t.name;
        if (!t.object.is_zero()) {
            const auto before = hn_decompose(t.object, s.slicing(), opts);
            const auto after = hn_decompose(t.object, out.sigma.slicing(), opts);
            row.semistable_before = before.size() == 1;
            row.semistable_after = after.size() == 1;
            if (row.semistable_before) row.phase_before = before.front().phase;
            if (row.semistable_after) row.phase_after = after.front().phase;
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

NormReport norm_sigma(const std::vector<ExactComplex>& u, const StabilityCondition& s,
                      const std::vector<TestObject>& testset, EnumerationOptions opts) {
    if (testset.empty()) throw PreconditionError("norm needs a nonempty testset");
    if (u.size() != s.heart_charge().size()) throw PreconditionError("U has the wrong number of entries");
    NormReport rep;
    for (const auto& t : testset) {
        if (!semistable_object(t.object, s.slicing(), opts)) {
            rep.skipped.push_back(t.name);
            continue;
        }
        const DimVector cls = t.object.klass();
        const double ratio = evaluate(u, cls).abs() / s.charge(cls).abs();
        rep.rows.push_back({t.name, ratio});
        rep.value = std::max(rep.value, ratio);
    }
    rep.error_bound = 8 * std::numeric_limits<double>::epsilon() * rep.value;
    return rep;
}

StabDistance stab_distance(const StabilityCondition& a, const StabilityCondition& b,
                           const std::vector<TestObject>& testset, EnumerationOptions opts) {
    if (testset.empty()) throw PreconditionError("stab distance needs a nonempty testset");
    StabDistance out;
    for (const auto& t : testset) {
        if (t.object.is_zero()) throw PreconditionError("testset member '" + t.name + "' is the zero object");
        const PhaseKey d = phase_distance(phi_bounds(t.object, a.slicing(), opts), phi_bounds(t.object, b.slicing(), opts));
        const double lr = std::abs(std::log(mass(t.object, b, opts).value / mass(t.object, a, opts).value));
        out.rows.push_back({t.name, d, lr});
        out.value = std::max({out.value, d.to_double(), lr});
    }
    return out;
}

SinSquaredBounds sin_squared_bounds(const Rational& eps) {
    const double s = std::sin(std::numbers::pi * eps.get_d());
    const Rational s2(s * s);
    const Rational band(1, 1L << 30);
    return {s2 * (1 - band), s2 * (1 + band)};
}

DeformResult deform(const StabilityCondition& s, const CentralCharge& w, const Rational& eps,
                    const std::vector<TestObject>& testset, EnumerationOptions opts) {
    return deform(s, w.values(), eps, testset, opts);
}

DeformResult deform(const StabilityCondition& s, const std::vector<ExactComplex>& w, const Rational& eps,
                    const std::vector<TestObject>& testset, EnumerationOptions opts) {
    if (!(s.action() == GLtildeElement::identity())) {
        throw PreconditionError("deform starts from a heart charge; apply the GL~ element afterwards");
    }
    if (eps <= 0 || eps >= Rational(1, 8)) throw PreconditionError("epsilon must lie in (0, 1/8)");
    if (w.size() != s.heart_charge().size()) throw PreconditionError("W has the wrong number of entries");
    if (testset.empty()) throw PreconditionError("deform needs a nonempty testset");
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!in_strict_upper_half(w[i])) {
            throw HeartChangeUnsupported("W(S" + std::to_string(i + 1) + ") = " + to_string(w[i]) +
                                         " leaves the upper half-plane; the heart would change");
        }
    }

    DeformResult out{StabilityCondition(CentralCharge(w)), {}};
    DeformReport& rep = out.report;
    rep.eps = eps;
    const SinSquaredBounds sb = sin_squared_bounds(eps);
    const double sin_eps = std::sqrt(sb.lower.get_d());

    std::set<DimVector> seen;
    for (const auto& t : testset) {
        std::set<DimVector> classes;
        for (const auto& [k, m] : t.object.parts()) bounded_classes(m.dims(), classes);
        for (const auto& c : classes) {
            if (!seen.insert(c).second) continue;
            const ExactComplex z = s.heart_charge()(c);
            const ExactComplex u = evaluate(w, c) - z;
            HypothesisRow row{t.name, c, sin_eps * z.abs() - u.abs(), false, false};
            const QuadScalar z2 = z.norm2();
            const QuadScalar u2 = u.norm2();
            if (sign(QuadScalar(sb.lower) * z2 - u2) > 0) {
                row.holds = true;
            } else if (sign(QuadScalar(sb.upper) * z2 - u2) > 0) {
                row.boundary = true;
            }
            rep.hypothesis.push_back(row);
            if (!row.holds) {
                throw PreconditionError("deformation hypothesis fails for '" + t.name + "' at class " + to_string(c) +
                                        (row.boundary ? " (within the guard band, rejected conservatively)" : ""));
            }
        }
    }

    rep.d_testset = PhaseKey::integer(0);
    for (const auto& t : testset) {
        if (t.object.is_zero()) continue;
        const PhaseBounds before = phi_bounds(t.object, s.slicing(), opts);
        const PhaseBounds after = phi_bounds(t.object, out.tau.slicing(), opts);
        const PhaseKey d = phase_distance(before, after);
        if (d > rep.d_testset) rep.d_testset = d;
        rep.conclusion.push_back({t.name, before, after, d});
    }
    rep.d_float = rep.d_testset.to_double();
    if (compare_with_rational(rep.d_testset, eps) != AngleOrder::less) {
        throw InvariantViolation("deformation conclusion d(P,Q) < eps fails on the testset: d = " +
                                 std::to_string(rep.d_float));
    }
    return out;
}

void check_phase_labels(const StabilityCondition& s, const std::vector<PhaseLabel>& labels, AxiomReport& report) {
    for (const auto& l : labels) {
        ++report.checked_a;
        const ExactComplex z = s.charge(l.cls);
        const ExactComplex dir = l.phase.direction();
        if (z.is_zero() || !cross(dir, z).is_zero() || sign(dot(dir, z)) <= 0) {
            report.violations.push_back({'a', "'" + l.name + "': Z = " + to_string(z) +
                                                  " is not a positive multiple of exp(i pi phi) for phi = " +
                                                  std::to_string(l.phase.to_double())});
        }
    }
}

AxiomReport validate_axioms(const StabilityCondition& s, const std::vector<TestObject>& testset,
                            EnumerationOptions opts) {
    AxiomReport rep;
    const SlicingView view = s.slicing();

    struct Semistable {
        const TestObject* t;
        long shift;
        PhaseKey phase;
    };
    std::vector<Semistable> semis;
    std::vector<PhaseLabel> labels;

    for (const auto& t : testset) {
        if (t.object.is_zero()) continue;
        std::vector<SliceFactor> factors;
        ++rep.checked_d;
        try {
            factors = hn_decompose(t.object, view, opts);
        } catch (const InvariantViolation& e) {
            rep.violations.push_back({'d', "'" + t.name + "': " + e.what()});
            continue;
        }
        for (const auto& f : factors) {
            const DimVector signed_cls = (f.shift % 2 == 0) ? f.cls : -1 * f.cls;
            labels.push_back({t.name + " factor " + to_string(f.cls), signed_cls, f.phase});
        }

        ++rep.checked_b;
        const auto shifted = hn_decompose(t.object.shifted(1), view, opts);
        bool offset_ok = shifted.size() == factors.size();
        for (std::size_t j = 0; offset_ok && j < factors.size(); ++j) {
            offset_ok = shifted[j].phase == factors[j].phase + 1;
        }
        if (!offset_ok) rep.violations.push_back({'b', "'" + t.name + "[1]' phases are not offset by exactly 1"});

        if (factors.size() == 1) semis.push_back({&t, factors.front().shift, factors.front().phase});
    }
    check_phase_labels(s, labels, rep);

    // Hom(M[k], N[l]) = Ext^{l-k}(M, N), nonzero only for l - k in {0, 1}.
    for (const auto& a : semis) {
        for (const auto& b : semis) {
            if (!(a.phase > b.phase)) continue;
            const long gap = b.shift - a.shift;
            if (gap != 0 && gap != 1) continue;
            ++rep.checked_c;
            const QuiverRep& m = a.t->object.parts().begin()->second;
            const QuiverRep& n = b.t->object.parts().begin()->second;
            const long h = gap == 0 ? hom_dim(m, n) : ext1_dim(m, n);
            if (h != 0) {
                rep.violations.push_back({'c', "Hom('" + a.t->name + "', '" + b.t->name + "') has dimension " +
                                                   std::to_string(h) + " although phi decreases"});
            }
        }
    }
    return rep;
}

}  // namespace stab
