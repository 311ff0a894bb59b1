// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fuzz_support.hpp"
#include "stabkit/ellcurve.hpp"
#include "stabkit/errors.hpp"
#include "stabkit/session.hpp"
#include "stabkit/stabspace.hpp"
#include "stabkit/walls.hpp"

using namespace stab;

namespace {

const std::string kFixtures = STABKIT_FIXTURES;
constexpr double kTwoPow30 = 1.0 / 1073741824.0;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(int n, const std::string& title, const std::function<Outcome()>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("%s criterion %d (%s): %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", n, title.c_str(), o.detail.c_str(),
                secs);
    std::fflush(stdout);
}

ExactComplex c(long re, long im) { return {QuadScalar(re), QuadScalar(im)}; }

double modulus(const ExactComplex& z) { return std::sqrt(z.norm2().to_double()); }

// The shared fuzz corpus for criteria 1, 2, 4, 5 and 9.
struct Case {
    fuzz::Instance inst;
    HNFiltration hn;
};

std::vector<Case> build_corpus(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Case> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto inst = fuzz::random_instance(rng, 6);
        out.push_back({std::move(inst), {}});
    }
    return out;
}

GLtildeElement random_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> e(-8, 8), den(1, 6), br(-2, 2);
    for (;;) {
        Mat2 m{Rational(e(rng), den(rng)), Rational(e(rng), den(rng)), Rational(e(rng), den(rng)),
               Rational(e(rng), den(rng))};
        m.a.canonicalize();
        m.b.canonicalize();
        m.c.canonicalize();
        m.d.canonicalize();
        if (m.det() > 0) return {m, br(rng)};
    }
}

std::string str(const PhaseKey& p) {
    std::ostringstream s;
    s << p.to_double();
    return s.str();
}

}  // namespace

int main() {
    std::vector<Case> corpus = build_corpus(500, 20240601);

    report(1, "HN oracle equivalence", [&] {
        const auto t0 = std::chrono::steady_clock::now();
        std::size_t bad = 0, multi = 0;
        for (auto& cs : corpus) {
            const auto& r = cs.inst.rep;
            const auto& z = cs.inst.charge;
            cs.hn = hn_filtration_max_sub(r, z);
            const HNFiltration other = hn_filtration_mdq(r, z);
            bool ok = cs.hn == other && cs.hn.classes == other.classes;
            ExactComplex sum = c(0, 0);
            DimVector cls(r.dims().size());
            for (std::size_t j = 0; j < cs.hn.length(); ++j) {
                if (j && !(cs.hn.phases[j] < cs.hn.phases[j - 1])) ok = false;
                if (cs.hn.factors[j].dims() != cs.hn.classes[j]) ok = false;
                sum = sum + z(cs.hn.classes[j]);
                cls = cls + cs.hn.classes[j];
            }
            if (!(sum == z(r.dims())) || cls != r.dims()) ok = false;
            if (cs.hn.length() > 1) ++multi;
            if (!ok) ++bad;
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return Outcome{bad == 0 && secs < 120,
                       std::to_string(corpus.size()) + " instances, " + std::to_string(multi) +
                           " with length > 1, " + std::to_string(bad) + " mismatches, " + std::to_string(secs) + " s"};
    });

    report(2, "semistability soundness", [&] {
        std::size_t bad = 0, oracle_checked = 0;
        for (const auto& cs : corpus) {
            const auto& r = cs.inst.rep;
            const auto cert = is_semistable(r, cs.inst.charge);
            // Exhaustive check through the library enumerator on every instance.
            bool exhaustive = true;
            const PhaseKey whole = phase(r.dims(), cs.inst.charge);
            for (const auto& s : enumerate_submodules(r)) {
                if (!s.dims().is_zero() && s.dims() != r.dims() && phase(s.dims(), cs.inst.charge) > whole) {
                    exhaustive = false;
                }
            }
            if (exhaustive != cert.semistable) ++bad;
            if (cert.semistable != (cs.hn.length() == 1)) ++bad;
            // Independent enumerator where the vertex spaces are small enough.
            long biggest = 1;
            for (long d : r.dims().values()) {
                long size = 1;
                for (long k = 0; k < d; ++k) size *= r.field().characteristic();
                biggest = std::max(biggest, size);
            }
            if (biggest <= 256) {
                ++oracle_checked;
                const auto o = fuzz::oracle_semistable(r, cs.inst.charge);
                if (o.semistable != cert.semistable) ++bad;
                if (o.submodules != enumerate_submodules(r).size()) ++bad;
            }
        }
        return Outcome{bad == 0 && oracle_checked >= 100,
                       std::to_string(corpus.size()) + " exhaustive checks, " + std::to_string(oracle_checked) +
                           " against the independent enumerator, " + std::to_string(bad) + " mismatches"};
    });

    report(3, "A2 wall fixture", [&] {
        auto q = std::make_shared<const Quiver>(Quiver::a_n(2));
        Matrix one(1, 1);
        one(0, 0) = 1;
        const QuiverRep p(q, Field::prime(2), {1, 1}, {one});
        const ChargePath path{{c(-1, 1), c(0, 1)}, {c(3, 1), c(0, 1)}};
        path.validate();
        const std::vector<TrackedRep> tracked{{"P", p}};
        const auto res = find_walls(path, {{{0, 1}, {1, 1}, "P"}}, tracked);

        std::string roots;
        for (const auto& w : res.walls) roots += (roots.empty() ? "" : ", ") + to_string(w.t.value());
        const bool one_wall_at_half =
            res.walls.size() == 1 && res.walls[0].t.value() == QuadScalar(Rational(1, 2));

        const bool left = is_semistable(p, path.charge_at(Rational(1, 4))).semistable;
        const bool right = is_semistable(p, path.charge_at(Rational(3, 4))).semistable;
        const bool flips = left != right;

        std::string detail = std::to_string(res.walls.size()) + " wall(s) at t = [" + roots +
                             "], expected exactly one at t = 1/2; P semistable at t=1/4: " +
                             (left ? "yes" : "no") + ", at t=3/4: " + (right ? "yes" : "no");
        return Outcome{one_wall_at_half && flips, detail};
    });

    report(4, "hom-vanishing", [&] {
        std::size_t pairs = 0, bad = 0;
        for (const auto& cs : corpus) {
            const auto& r = cs.inst.rep;
            const auto& z = cs.inst.charge;
            std::vector<QuiverRep> semis(cs.hn.factors.begin(), cs.hn.factors.end());
            for (const auto& s : enumerate_submodules(r)) {
                if (s.dims().is_zero() || s.dims() == r.dims()) continue;
                const QuiverRep sub = subrepresentation(r, s);
                if (is_semistable(sub, z).semistable) semis.push_back(sub);
                const QuiverRep quo = quotient(r, s);
                if (is_semistable(quo, z).semistable) semis.push_back(quo);
                if (semis.size() > 24) break;
            }
            for (const auto& m : semis) {
                for (const auto& n : semis) {
                    if (phase(m.dims(), z) > phase(n.dims(), z)) {
                        ++pairs;
                        if (hom_dim(m, n) != 0) ++bad;
                    }
                }
            }
        }
        return Outcome{bad == 0 && pairs > 0,
                       std::to_string(pairs) + " ordered pairs with phi(M) > phi(N), " + std::to_string(bad) +
                           " with nonzero Hom"};
    });

    report(5, "mass inequality", [&] {
        std::size_t bad = 0, strict = 0, equal = 0;
        for (const auto& cs : corpus) {
            const Mass m = mass(cs.hn, cs.inst.charge);
            const double z = modulus(cs.inst.charge(cs.inst.rep.dims()));
            if (m.value < z - kTwoPow30) ++bad;
            const bool eq = std::abs(m.value - z) <= kTwoPow30;
            if (eq != (cs.hn.length() == 1)) ++bad;
            (eq ? equal : strict)++;
        }
        return Outcome{bad == 0, std::to_string(equal) + " equalities (all length 1), " + std::to_string(strict) +
                                     " strict, " + std::to_string(bad) + " violations"};
    });

    report(6, "deformation theorem shadow", [&] {
        std::size_t accepted = 0, rejected = 0, bad = 0;
        std::mt19937_64 rng(777);
        const std::vector<std::pair<std::string, std::pair<std::string, std::string>>> fixtures{
            {"a2.json", {"Zstd", "TC"}}, {"kronecker.json", {"Z", "T"}}};
        for (const auto& [file, names] : fixtures) {
            const Session s = load_session(kFixtures + "/" + file);
            const StabilityCondition sigma(s.charge(names.first));
            const auto testset = s.testset(names.second);
            for (const Rational eps : {Rational(1, 20), Rational(1, 10)}) {
                std::size_t got = 0;
                for (int attempt = 0; got < 50 && attempt < 5000; ++attempt) {
                    std::uniform_int_distribution<long> d(-120, 120);
                    std::vector<ExactComplex> w;
                    for (const auto& z : sigma.heart_charge().values()) {
                        const Rational scale = eps / 40;
                        Rational dx = scale * d(rng), dy = scale * d(rng);
                        dx.canonicalize();
                        dy.canonicalize();
                        w.push_back(z + ExactComplex{QuadScalar(dx), QuadScalar(dy)});
                    }
                    DeformResult r{sigma, {}};
                    try {
                        r = deform(sigma, w, eps, testset);
                    } catch (const HeartChangeUnsupported&) {
                        ++rejected;
                        continue;
                    } catch (const PreconditionError&) {
                        ++rejected;
                        continue;
                    } catch (const InvariantViolation&) {
                        ++bad;
                        ++got;
                        continue;
                    }
                    ++got;
                    const auto dist = slicing_distance(sigma.slicing(), r.tau.slicing(), testset);
                    if (compare_with_rational(dist.exact, eps) != AngleOrder::less) ++bad;
                    if (!(dist.exact == r.report.d_testset)) ++bad;
                }
                accepted += got;
                if (got < 50) ++bad;
            }
        }
        return Outcome{bad == 0, std::to_string(accepted) + " perturbations satisfying the hypothesis (" +
                                     std::to_string(rejected) + " rejected samples), " + std::to_string(bad) +
                                     " violations of d < eps"};
    });

    report(7, "GL~ action laws", [&] {
        std::size_t bad = 0, checks = 0;
        std::mt19937_64 rng(4242);
        for (const auto& [file, names] : std::vector<std::pair<std::string, std::pair<std::string, std::string>>>{
                 {"a2.json", {"Zstd", "TC"}}, {"kronecker.json", {"Z", "T"}}}) {
            const Session s = load_session(kFixtures + "/" + file);
            const StabilityCondition sigma(s.charge(names.first));
            const auto testset = s.testset(names.second);
            for (int i = 0; i < 50; ++i) {
                const auto g1 = random_element(rng), g2 = random_element(rng);
                const auto lhs = act(act(sigma, g2), g1);
                const auto rhs = act(sigma, compose(g1, g2));
                if (!(lhs.charge_values() == rhs.charge_values())) ++bad;
                for (const auto& t : testset) {
                    ++checks;
                    const auto a = phi_bounds(t.object, lhs.slicing());
                    const auto b = phi_bounds(t.object, rhs.slicing());
                    if (!(a.minus == b.minus && a.plus == b.plus)) ++bad;
                    // Relabelling by g2 then g1 equals relabelling the original phases.
                    const auto o = phi_bounds(t.object, sigma.slicing());
                    if (!(a.plus == g1.relabel(g2.relabel(o.plus)))) ++bad;
                }
                for (const auto& row : gl_act(sigma, compose(g1, g2), testset).rows) {
                    if (row.semistable_before != row.semistable_after) ++bad;
                }
            }
            const auto shifted = gl_act(sigma, GLtildeElement::shift(), testset);
            for (const auto& row : shifted.rows) {
                ++checks;
                if (row.phase_before && !(row.phase_after && *row.phase_after == *row.phase_before + 1)) ++bad;
            }
            for (const auto& t : testset) {
                const auto a = phi_bounds(t.object, sigma.slicing());
                const auto b = phi_bounds(t.object.shifted(1), sigma.slicing());
                if (!(b.minus == a.minus + 1 && b.plus == a.plus + 1)) ++bad;
            }
            if (!validate_axioms(act(sigma, GLtildeElement::shift()), testset).ok()) ++bad;
        }
        return Outcome{bad == 0, "100 random pairs, " + std::to_string(checks) + " phase checks, " +
                                     std::to_string(bad) + " violations"};
    });

    report(8, "metric scaling fixture", [&] {
        std::string detail;
        bool ok = true;
        for (const auto& [file, names] : std::vector<std::pair<std::string, std::pair<std::string, std::string>>>{
                 {"a2.json", {"Zstd", "TC"}}, {"kronecker.json", {"Z", "T"}}}) {
            const Session s = load_session(kFixtures + "/" + file);
            const StabilityCondition sigma(s.charge(names.first));
            const auto testset = s.testset(names.second);
            const auto d = stab_distance(sigma, act(sigma, GLtildeElement(Mat2::scalar(2), 0)), testset);
            const double err = std::abs(d.value - std::log(2.0));
            ok = ok && err < 1e-12;
            const auto sl = slicing_distance(sigma.slicing(), act(sigma, GLtildeElement::shift()).slicing(), testset);
            ok = ok && sl.exact == PhaseKey::integer(1);
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s: |d - log 2| = %.2e, slicing shift distance = %s; ", file.c_str(), err,
                          str(sl.exact).c_str());
            detail += buf;
        }
        return Outcome{ok, detail};
    });

    report(9, "discreteness", [&] {
        std::size_t bad = 0;
        for (const auto& cs : corpus) {
            if (!check_discreteness(cs.inst.charge).discrete) ++bad;
        }
        const auto irr = check_discreteness(CentralCharge({c(0, 1), {QuadScalar(0), QuadScalar::sqrt_of(2)}}));
        const bool ok = bad == 0 && !irr.discrete;
        return Outcome{ok, std::to_string(corpus.size()) + " rational charges, " + std::to_string(bad) +
                               " reported non-discrete; (i, sqrt2 i): " + (irr.discrete ? "discrete" : "non_discrete")};
    });

    report(10, "elliptic round trip", [&] {
        std::size_t bad = 0;
        std::mt19937_64 rng(10);
        for (int i = 0; i < 100; ++i) {
            const auto g = random_element(rng);
            if (!(curve::classify(curve::act_on_standard(g)) == g)) ++bad;
            const auto r = curve::modular_reduce(g);
            if (r.gamma.det() != 1 || !curve::in_fundamental_domain(r.reduced)) ++bad;
        }
        const auto sky = curve::std_charge({0, 1});
        const bool sky_ok =
            sky == c(-1, 0) && curve::phase(curve::standard_condition(), {0, 1}) == PhaseKey::integer(1);
        return Outcome{bad == 0 && sky_ok, "100 random elements, " + std::to_string(bad) +
                                               " failures; skyscraper Z = -1, phase 1: " + (sky_ok ? "yes" : "no")};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
