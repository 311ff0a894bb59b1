#include "stabkit/slicing.hpp"

#include "stabkit/errors.hpp"

namespace stab {

FormalComplex FormalComplex::of(QuiverRep m, long shift) {
    FormalComplex fc;
    fc.add_part(shift, m);
    return fc;
}

void FormalComplex::add_part(long shift, const QuiverRep& m) {
    if (m.is_zero()) return;
    auto it = parts_.find(shift);
    if (it == parts_.end()) {
        parts_.emplace(shift, m);
    } else {
        it->second = direct_sum(it->second, m);
    }
}

DimVector FormalComplex::klass() const {
    if (parts_.empty()) throw PreconditionError("class of the zero object needs a vertex count");
    DimVector sum(parts_.begin()->second.dims().size());
    for (const auto& [k, m] : parts_) sum = (k % 2 == 0) ? sum + m.dims() : sum - m.dims();
    return sum;
}

FormalComplex FormalComplex::shifted(long n) const {
    FormalComplex out;
    for (const auto& [k, m] : parts_) out.parts_.emplace(k + n, m);
    return out;
}

FormalComplex direct_sum(const FormalComplex& a, const FormalComplex& b) {
    FormalComplex out = a;
    for (const auto& [k, m] : b.parts_) out.add_part(k, m);
    return out;
}

PhaseKey SlicingView::phase_of(const DimVector& cls, long shift) const {
    return relabel.relabel(phase(cls, heart) + shift);
}

std::vector<SliceFactor> hn_decompose(const FormalComplex& fc, const SlicingView& s, EnumerationOptions opts) {
    if (fc.is_zero()) throw PreconditionError("the zero object has no HN decomposition");
    std::vector<SliceFactor> out;
    for (auto it = fc.parts().rbegin(); it != fc.parts().rend(); ++it) {
        const long k = it->first;
        const HNFiltration hn = hn_filtration_max_sub(it->second, s.heart, opts);
        for (std::size_t j = 0; j < hn.length(); ++j) {
            out.push_back({k, hn.factors[j], hn.classes[j], s.phase_of(hn.classes[j], k)});
        }
    }
    for (std::size_t j = 1; j < out.size(); ++j) {
        if (!(out[j - 1].phase > out[j].phase)) throw InvariantViolation("slicing decomposition is not descending");
    }
    return out;
}

PhaseBounds phi_bounds(const FormalComplex& fc, const SlicingView& s, EnumerationOptions opts) {
    const auto factors = hn_decompose(fc, s, opts);
    return {factors.back().phase, factors.front().phase};
}

bool in_interval(const FormalComplex& fc, const SlicingView& s, const PhaseInterval& interval,
                 EnumerationOptions opts) {
    if (fc.is_zero()) return true;
    const PhaseBounds b = phi_bounds(fc, s, opts);
    const bool lower_ok = interval.lower.closed ? interval.lower.value <= b.minus : interval.lower.value < b.minus;
    const bool upper_ok = interval.upper.closed ? b.plus <= interval.upper.value : b.plus < interval.upper.value;
    return lower_ok && upper_ok;
}

SlicingDistance slicing_distance(const SlicingView& p, const SlicingView& q, const std::vector<TestObject>& testset,
                                 EnumerationOptions opts) {
    if (testset.empty()) throw PreconditionError("slicing distance needs a nonempty testset");
    SlicingDistance out{PhaseKey::integer(0), 0.0, true, {}};
    for (const auto& t : testset) {
        if (t.object.is_zero()) continue;
        const PhaseBounds a = phi_bounds(t.object, p, opts);
        const PhaseBounds b = phi_bounds(t.object, q, opts);
        const PhaseKey dm = abs(a.minus - b.minus);
        const PhaseKey dp = abs(a.plus - b.plus);
        const PhaseKey d = dm > dp ? dm : dp;
        if (d > out.exact) out.exact = d;
        out.rows.push_back({t.name, a, b, d});
    }
    out.value = out.exact.to_double();
    return out;
}

ContainmentReport containment_check(const SlicingView& p, const SlicingView& q, const Rational& eps,
                                    const std::vector<TestObject>& testset, EnumerationOptions opts) {
    if (testset.empty()) throw PreconditionError("containment check needs a nonempty testset");
    if (eps < 0) throw PreconditionError("epsilon must be nonnegative");
    ContainmentReport rep;
    for (const auto& t : testset) {
        ContainmentRow row;
        row.name = t.name;
        if (t.object.is_zero()) {
            rep.rows.push_back(row);
            continue;
        }
        const auto in_q = hn_decompose(t.object, q, opts);
        row.semistable_in_q = in_q.size() == 1;
        if (row.semistable_in_q) {
            const PhaseKey ph = in_q.front().phase;
            const PhaseBounds b = phi_bounds(t.object, p, opts);
            row.phase_in_q = ph;
            row.bounds_in_p = b;
            row.upper = compare_with_rational(b.plus - ph, eps);
            row.lower = compare_with_rational(ph - b.minus, eps);
            for (AngleOrder o : {row.upper, row.lower}) {
                if (o == AngleOrder::greater) rep.holds = false;
                if (o == AngleOrder::undecided) rep.certified = false;
            }
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace stab
