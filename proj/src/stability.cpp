#include "stabkit/stability.hpp"

#include <algorithm>
#include <cmath>

#include "stabkit/errors.hpp"

namespace stab {

ExactComplex evaluate(std::span<const ExactComplex> values, const DimVector& a) {
    if (a.size() != values.size()) {
        throw PreconditionError("class " + to_string(a) + " does not match a charge on " +
                                std::to_string(values.size()) + " vertices");
    }
    ExactComplex sum;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (a[i] != 0) sum += QuadScalar(a[i]) * values[i];
    }
    return sum;
}

CentralCharge::CentralCharge(std::vector<ExactComplex> values) : values_(std::move(values)) {
    if (values_.empty()) throw PreconditionError("central charge needs at least one value");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!in_strict_upper_half(values_[i])) {
            throw PreconditionError("Z(S" + std::to_string(i + 1) + ") = " + to_string(values_[i]) +
                                    " is not in the strict upper half-plane");
        }
    }
    (void)radicand();
}

long CentralCharge::radicand() const {
    long d = 1;
    for (const auto& z : values_) {
        for (const QuadScalar* s : {&z.re, &z.im}) {
            if (s->is_rational()) continue;
            if (d != 1 && d != s->radicand()) throw PreconditionError("charge mixes quadratic extensions");
            d = s->radicand();
        }
    }
    return d;
}

PhaseKey phase(const DimVector& a, const CentralCharge& z) {
    const ExactComplex w = z(a);
    if (w.is_zero()) throw PreconditionError("class " + to_string(a) + " has zero charge; its phase is undefined");
    if (in_strict_upper_half(w)) return PhaseKey(0, w);
    return PhaseKey::principal(w);
}

namespace {

void require_nonzero(const QuiverRep& rep) {
    if (rep.is_zero()) throw PreconditionError("the zero representation has no phase");
}

// Every class 0 != b <= a, b != a.
std::vector<DimVector> proper_subclasses(const DimVector& a) {
    std::vector<DimVector> out;
    DimVector b(a.size());
    while (true) {
        std::size_t i = 0;
        while (i < a.size() && b[i] == a[i]) {
            b[i] = 0;
            ++i;
        }
        if (i == a.size()) break;
        ++b[i];
        if (b != a) out.push_back(b);
    }
    return out;
}

// Semistability over Q can only be certified when no sub-dimension vector
// could destabilise.
bool certify_over_q(const QuiverRep& rep, const CentralCharge& z) {
    const PhaseKey pe = phase(rep.dims(), z);
    for (const auto& b : proper_subclasses(rep.dims())) {
        if (phase(b, z) > pe) return false;
    }
    return true;
}

[[noreturn]] void refuse_over_q(const QuiverRep& rep) {
    throw PreconditionError("cannot decide semistability of a representation with class " + to_string(rep.dims()) +
                            " over Q: some sub-dimension vector has larger phase and quiver Grassmannians over Q "
                            "are not searched");
}

HNFiltration trivial_filtration(const QuiverRep& rep, const CentralCharge& z) {
    HNFiltration hn;
    hn.chain = {Submodule::zero(rep), Submodule::whole(rep)};
    hn.factors = {rep};
    hn.classes = {rep.dims()};
    hn.phases = {phase(rep.dims(), z)};
    return hn;
}

void check_descending(const HNFiltration& hn) {
    for (std::size_t j = 1; j < hn.phases.size(); ++j) {
        if (!(hn.phases[j - 1] > hn.phases[j])) {
            throw InvariantViolation("HN phases are not strictly descending");
        }
    }
}

// The unique maximal-phase submodule of maximal dimension.
Submodule max_destabilising_sub(const QuiverRep& rep, const CentralCharge& z, const EnumerationOptions& opts) {
    const auto subs = enumerate_submodules(rep, opts);
    std::optional<PhaseKey> best;
    std::vector<const Submodule*> top;
    for (const auto& s : subs) {
        if (s.dims().is_zero()) continue;
        const PhaseKey ph = phase(s.dims(), z);
        if (!best || ph > *best) {
            best = ph;
            top = {&s};
        } else if (ph == *best) {
            top.push_back(&s);
        }
    }
    long max_dim = -1;
    const Submodule* chosen = nullptr;
    std::size_t ties = 0;
    for (const Submodule* s : top) {
        const long d = s->dims().total();
        if (d > max_dim) {
            max_dim = d;
            chosen = s;
            ties = 1;
        } else if (d == max_dim) {
            ++ties;
        }
    }
    if (ties != 1) {
        throw InvariantViolation("maximal-phase subobject of maximal dimension is not unique (" +
                                 std::to_string(ties) + " candidates of dimension " + std::to_string(max_dim) + ")");
    }
    return *chosen;
}

// Kernel of a maximally destabilising quotient, checked exhaustively: every
// quotient of minimal phase must factor through it (its kernel contains ours).
Submodule mdq_kernel(const QuiverRep& rep, const CentralCharge& z, const EnumerationOptions& opts) {
    const auto subs = enumerate_submodules(rep, opts);
    std::optional<PhaseKey> best;
    std::vector<const Submodule*> bottom;
    for (const auto& k : subs) {
        if (k.dims() == rep.dims()) continue;
        const PhaseKey ph = phase(rep.dims() - k.dims(), z);
        if (!best || ph < *best) {
            best = ph;
            bottom = {&k};
        } else if (ph == *best) {
            bottom.push_back(&k);
        }
    }
    const Submodule* smallest = *std::min_element(bottom.begin(), bottom.end(), [](const auto* a, const auto* b) {
        return a->dims().total() < b->dims().total();
    });
    for (const Submodule* k : bottom) {
        if (!contains(rep, *k, *smallest)) {
            throw InvariantViolation("no maximally destabilising quotient: minimal-phase quotients with kernels " +
                                     to_string(smallest->dims()) + " and " + to_string(k->dims()) +
                                     " do not factor through each other");
        }
    }
    return *smallest;
}

}  // namespace

SemistabilityCertificate is_semistable(const QuiverRep& rep, const CentralCharge& z, EnumerationOptions opts) {
    require_nonzero(rep);
    SemistabilityCertificate cert;
    if (!rep.field().is_finite()) {
        if (rep.total_dimension() == 1 || certify_over_q(rep, z)) {
            cert.semistable = true;
            cert.by_dimension_vectors = true;
            return cert;
        }
        refuse_over_q(rep);
    }
    const PhaseKey pe = phase(rep.dims(), z);
    for (auto& s : enumerate_submodules(rep, opts)) {
        if (s.dims().is_zero()) continue;
        if (phase(s.dims(), z) > pe) {
            cert.witness = std::move(s);
            return cert;
        }
    }
    cert.semistable = true;
    return cert;
}

HNFiltration hn_filtration_max_sub(const QuiverRep& rep, const CentralCharge& z, EnumerationOptions opts) {
    require_nonzero(rep);
    if (!rep.field().is_finite()) {
        if (certify_over_q(rep, z)) return trivial_filtration(rep, z);
        refuse_over_q(rep);
    }
    HNFiltration hn;
    Submodule base = Submodule::zero(rep);
    hn.chain.push_back(base);
    QuiverRep rest = rep;
    while (!rest.is_zero()) {
        const Submodule a = max_destabilising_sub(rest, z, opts);
        hn.factors.push_back(subrepresentation(rest, a));
        hn.classes.push_back(a.dims());
        hn.phases.push_back(phase(a.dims(), z));
        base = lift_from_quotient(rep, base, a);
        hn.chain.push_back(base);
        rest = quotient(rep, base);
    }
    check_descending(hn);
    return hn;
}

HNFiltration hn_filtration_mdq(const QuiverRep& rep, const CentralCharge& z, EnumerationOptions opts) {
    require_nonzero(rep);
    if (!rep.field().is_finite()) {
        if (certify_over_q(rep, z)) return trivial_filtration(rep, z);
        refuse_over_q(rep);
    }
    // Peel quotients off the top: E -> B with kernel E', then repeat on E'.
    std::vector<Submodule> tops;  // E, E', E'', ... as submodules of rep
    std::vector<QuiverRep> quotients;
    Submodule current = Submodule::whole(rep);
    while (true) {
        const QuiverRep obj = subrepresentation(rep, current);
        const Submodule k = mdq_kernel(obj, z, opts);
        tops.push_back(current);
        quotients.push_back(quotient(obj, k));
        if (k.dims().is_zero()) break;
        current = push_from_sub(rep, current, k);
    }
    HNFiltration hn;
    hn.chain.push_back(Submodule::zero(rep));
    for (auto it = tops.rbegin(); it != tops.rend(); ++it) hn.chain.push_back(*it);
    for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) {
        hn.classes.push_back(it->dims());
        hn.phases.push_back(phase(it->dims(), z));
        hn.factors.push_back(*it);
    }
    check_descending(hn);
    return hn;
}

Mass mass(std::span<const ExactComplex> factor_charges) {
    constexpr double u = 0x1p-53;
    Mass m;
    double err = 0;
    for (const auto& z : factor_charges) {
        const QuadScalar n2 = z.norm2();
        const double a = n2.rational_part().get_d();
        const double b = n2.surd_part().get_d();
        const double root_d = std::sqrt(static_cast<double>(n2.radicand()));
        const double n2d = std::max(0.0, a + b * root_d);
        const double modulus = std::sqrt(n2d);
        // Conversion error of |Z|^2, propagated through sqrt, plus rounding of sqrt itself.
        const double n2_err = (std::fabs(a) + std::fabs(b) * root_d) * 4 * u;
        err += (modulus > 0 ? n2_err / (2 * modulus) : std::sqrt(n2_err)) + modulus * 2 * u;
        m.value += modulus;
    }
    m.error_bound = err + m.value * static_cast<double>(factor_charges.size() + 1) * u;
    return m;
}

Mass mass(const HNFiltration& hn, const CentralCharge& z) {
    std::vector<ExactComplex> charges;
    for (const auto& c : hn.classes) charges.push_back(z(c));
    return mass(charges);
}

namespace {

// Row-style Hermite reduction; returns the nonzero rows (a Z-basis of the row lattice).
std::vector<std::vector<Integer>> integer_row_basis(std::vector<std::vector<Integer>> rows, std::size_t width) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
        while (true) {
            std::size_t pick = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (pick == rows.size() || abs(rows[i][col]) < abs(rows[pick][col])) pick = i;
            }
            if (pick == rows.size()) break;
            std::swap(rows[r], rows[pick]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
                for (std::size_t j = 0; j < width; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) done = false;
            }
            if (done) {
                ++r;
                break;
            }
        }
    }
    rows.resize(r);
    return rows;
}

}  // namespace

DiscretenessReport check_discreteness(const CentralCharge& z) {
    DiscretenessReport rep;
    rep.radicand = z.radicand();
    const bool quad = rep.radicand != 1;
    const std::size_t width = quad ? 4 : 2;

    std::vector<std::vector<Rational>> coords;
    Integer den = 1;
    for (const auto& v : z.values()) {
        std::vector<Rational> c = quad ? std::vector<Rational>{v.re.rational_part(), v.re.surd_part(),
                                                               v.im.rational_part(), v.im.surd_part()}
                                       : std::vector<Rational>{v.re.rational_part(), v.im.rational_part()};
        for (const auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        coords.push_back(std::move(c));
    }
    std::vector<std::vector<Integer>> rows;
    for (const auto& c : coords) {
        std::vector<Integer> r;
        for (const auto& x : c) {
            Rational scaled = x * Rational(den);
            r.push_back(scaled.get_num());
        }
        rows.push_back(std::move(r));
    }
    const auto basis = integer_row_basis(std::move(rows), width);
    rep.rank_over_z = basis.size();

    std::vector<ExactComplex> vectors;
    for (const auto& b : basis) {
        std::vector<Rational> v;
        for (const auto& x : b) {
            Rational q(x, den);
            q.canonicalize();
            v.push_back(q);
        }
        if (quad) {
            rep.z_basis.push_back(v);
            vectors.emplace_back(QuadScalar(v[0], v[1], rep.radicand), QuadScalar(v[2], v[3], rep.radicand));
        } else {
            rep.z_basis.push_back({v[0], 0, v[1], 0});
            vectors.emplace_back(QuadScalar(v[0]), QuadScalar(v[1]));
        }
    }
    rep.rank_over_r = vectors.empty() ? 0 : 1;
    for (std::size_t i = 0; i < vectors.size() && rep.rank_over_r < 2; ++i) {
        for (std::size_t j = i + 1; j < vectors.size(); ++j) {
            if (sign(cross(vectors[i], vectors[j])) != 0) {
                rep.rank_over_r = 2;
                break;
            }
        }
    }
    rep.discrete = rep.rank_over_z == rep.rank_over_r;
    rep.explanation = "image is a free abelian group of rank " + std::to_string(rep.rank_over_z) +
                      " spanning a real subspace of dimension " + std::to_string(rep.rank_over_r) +
                      (rep.discrete ? "; the Z-basis is R-linearly independent, so the image is a lattice"
                                    : "; more Z-generators than real dimensions, so the image is dense in its span");
    return rep;
}

}  // namespace stab
