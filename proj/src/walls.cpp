#include "stabkit/walls.hpp"

#include <algorithm>
#include <set>

#include "stabkit/errors.hpp"

namespace stab {

namespace {

Rational ratio(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

WallRoot make_root(const Rational& base, const Rational& surd, long disc) {
    WallRoot r;
    r.p = base.get_num();
    r.q = base.get_den();
    if (surd != 0) {
        r.a = surd.get_num();
        r.b = surd.get_den();
        r.disc = disc;
    }
    return r;
}

bool in_unit_interval(const QuadScalar& v) { return sign(v) >= 0 && sign(QuadScalar(1) - v) >= 0; }

mpf_class high_precision(const WallRoot& r) {
    constexpr mp_bitcnt_t bits = 1024;
    mpf_class v(mpf_class(r.p, bits) / mpf_class(r.q, bits), bits);
    if (r.a != 0) {
        mpf_class s(r.disc, bits);
        s = sqrt(s);
        v += mpf_class(r.a, bits) / mpf_class(r.b, bits) * s;
    }
    return v;
}

// Coefficients of cross(Z_t(alpha), Z_t(beta)) = c0 + c1 t + c2 t^2.
struct CrossPoly {
    Rational c0, c1, c2;

    bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }
    int sign_at(const Rational& t) const { return stab::sign(Rational(c0 + c1 * t + c2 * t * t)); }
};

Rational rational_part(const QuadScalar& x) {
    if (!x.is_rational()) throw PreconditionError("charge paths need rational endpoint charges");
    return x.rational_part();
}

CrossPoly cross_poly(const ChargePath& path, const DimVector& alpha, const DimVector& beta) {
    const ExactComplex a0 = evaluate(path.start, alpha);
    const ExactComplex b0 = evaluate(path.start, beta);
    const ExactComplex da = evaluate(path.end, alpha) - a0;
    const ExactComplex db = evaluate(path.end, beta) - b0;
    return {rational_part(cross(a0, b0)), rational_part(cross(a0, db) + cross(da, b0)), rational_part(cross(da, db))};
}

// A dyadic rational strictly between lo and hi (lo < hi).
Rational between(const QuadScalar& lo, const QuadScalar& hi) {
    Rational r(0.5 * (lo.to_double() + hi.to_double()));
    if (sign(QuadScalar(r) - lo) > 0 && sign(hi - QuadScalar(r)) > 0) return r;
    throw InvariantViolation("no double-precision sample point separates two adjacent walls");
}

}  // namespace

QuadScalar WallRoot::value() const {
    const Rational base = ratio(p, q);
    if (a == 0) return QuadScalar(base);
    return QuadScalar(base, ratio(a, b), disc);
}

int compare(const WallRoot& x, const WallRoot& y) {
    if (x.disc == y.disc || x.a == 0 || y.a == 0) return sign(x.value() - y.value());
    // 1, sqrt(d1), sqrt(d2) are independent over Q, so the roots differ.
    return cmp(high_precision(x), high_precision(y)) < 0 ? -1 : 1;
}

void ChargePath::validate() const {
    if (start.size() != end.size()) throw PreconditionError("path endpoints have different lengths");
    for (std::size_t i = 0; i < start.size(); ++i) {
        for (const auto* z : {&start[i], &end[i]}) {
            if (!z->is_rational()) throw PreconditionError("charge paths need rational endpoint charges");
            if (!in_strict_upper_half(*z)) {
                throw PreconditionError("path leaves the upper half-plane at vertex " + std::to_string(i + 1) + ": " +
                                        to_string(*z));
            }
        }
    }
}

std::vector<ExactComplex> ChargePath::at(const Rational& t) const {
    std::vector<ExactComplex> out;
    out.reserve(start.size());
    const QuadScalar s(t);
    for (std::size_t i = 0; i < start.size(); ++i) out.push_back(start[i] + s * (end[i] - start[i]));
    return out;
}

std::vector<PolyRoot> roots_in_unit_interval(const Rational& c0, const Rational& c1, const Rational& c2) {
    std::vector<PolyRoot> out;
    auto keep = [&](const WallRoot& r, bool twice) {
        if (in_unit_interval(r.value())) out.push_back({r, twice});
    };
    if (c2 == 0) {
        if (c1 == 0) {
            if (c0 == 0) throw PreconditionError("identically zero polynomial has no isolated roots");
            return out;
        }
        keep(make_root(-c0 / c1, 0, 1), false);
        return out;
    }
    const Rational disc = c1 * c1 - 4 * c2 * c0;
    const Rational centre = -c1 / (2 * c2);
    if (disc < 0) return out;
    if (disc == 0) {
        keep(make_root(centre, 0, 1), true);
        return out;
    }
    // sqrt(n/m) = sqrt(n m)/m = (k/m) sqrt(D), n m = k^2 D with D squarefree.
    const Integer nm = disc.get_num() * disc.get_den();
    const Integer d = squarefree_part(nm);
    Integer k;
    const Integer quotient = nm / d;
    mpz_sqrt(k.get_mpz_t(), quotient.get_mpz_t());
    Rational half_width = ratio(k, disc.get_den()) / (2 * c2);
    if (half_width < 0) half_width = -half_width;
    if (d == 1) {
        keep(make_root(centre - half_width, 0, 1), false);
        keep(make_root(centre + half_width, 0, 1), false);
    } else {
        if (!d.fits_slong_p()) throw PreconditionError("discriminant too large for the radicand type");
        keep(make_root(centre, -half_width, d.get_si()), false);
        keep(make_root(centre, half_width, d.get_si()), false);
    }
    return out;
}

std::vector<ClassPair> auto_pairs(const std::vector<TrackedRep>& tracked, EnumerationOptions opts) {
    std::vector<ClassPair> out;
    for (const auto& t : tracked) {
        const DimVector& top = t.rep.dims();
        std::set<DimVector> classes;
        if (t.rep.field().is_finite()) {
            for (const auto& s : enumerate_submodules(t.rep, opts)) classes.insert(s.dims());
        } else {
            // Over Q the submodule lattice is not enumerated; every bounded class is a candidate.
            DimVector c(top.size());
            for (;;) {
                std::size_t i = 0;
                while (i < top.size() && c[i] == top[i]) c[i++] = 0;
                if (i == top.size()) break;
                ++c[i];
                classes.insert(c);
            }
        }
        for (const auto& c : classes) {
            if (c.is_zero() || c == top || proportional(c, top)) continue;
            out.push_back({c, top, t.name});
        }
    }
    return out;
}

WallSearch find_walls(const ChargePath& path, const std::vector<ClassPair>& pairs,
                      const std::vector<TrackedRep>& tracked, EnumerationOptions opts) {
    path.validate();
    WallSearch out;
    for (const auto& pair : pairs) {
        if (pair.alpha.size() != path.start.size() || pair.beta.size() != path.start.size()) {
            throw PreconditionError("class pair has the wrong number of vertices");
        }
        if (pair.alpha.is_zero() || pair.beta.is_zero() || proportional(pair.alpha, pair.beta)) {
            throw PreconditionError("classes " + to_string(pair.alpha) + " and " + to_string(pair.beta) +
                                    " are proportional; their phases never separate");
        }
        const CrossPoly poly = cross_poly(path, pair.alpha, pair.beta);
        if (poly.is_zero()) {
            out.degenerate.push_back(pair);
            continue;
        }
        const QuiverRep* rep = nullptr;
        for (const auto& t : tracked) {
            if (t.name == pair.tracked) rep = &t.rep;
        }
        auto verdict = [&](const Rational& t) -> std::optional<bool> {
            if (rep == nullptr) return std::nullopt;
            try {
                return is_semistable(*rep, path.charge_at(t), opts).semistable;
            } catch (const PreconditionError&) {
                return std::nullopt;
            }
        };

        const auto roots = roots_in_unit_interval(poly.c0, poly.c1, poly.c2);
        for (std::size_t j = 0; j < roots.size(); ++j) {
            WallEvent ev{roots[j].t, pair, roots[j].double_root, {}};
            const QuadScalar here = roots[j].t.value();
            const QuadScalar lo = j == 0 ? QuadScalar(0) : roots[j - 1].t.value();
            const QuadScalar hi = j + 1 == roots.size() ? QuadScalar(1) : roots[j + 1].t.value();
            if (sign(here - lo) > 0) ev.evidence.left = between(lo, here);
            if (sign(hi - here) > 0) ev.evidence.right = between(here, hi);
            if (ev.evidence.left) {
                ev.evidence.cross_left = poly.sign_at(*ev.evidence.left);
                ev.evidence.semistable_left = verdict(*ev.evidence.left);
            }
            if (ev.evidence.right) {
                ev.evidence.cross_right = poly.sign_at(*ev.evidence.right);
                ev.evidence.semistable_right = verdict(*ev.evidence.right);
            }
            out.walls.push_back(std::move(ev));
        }
    }
    std::stable_sort(out.walls.begin(), out.walls.end(),
                     [](const WallEvent& x, const WallEvent& y) { return compare(x.t, y.t) < 0; });
    return out;
}

}  // namespace stab
