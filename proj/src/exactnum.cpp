#include "stabkit/exactnum.hpp"

#include <cmath>
#include <numbers>
#include <regex>
#include <vector>

#include "stabkit/errors.hpp"

namespace stab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

constexpr std::string_view kSqrtSign = "\xE2\x88\x9A";  // U+221A

// Positive rescaling so the rational coordinates become coprime integers.
ExactComplex normalize_scale(const ExactComplex& z) {
    const Rational* coords[] = {&z.re.rational_part(), &z.re.surd_part(),
                                &z.im.rational_part(), &z.im.surd_part()};
    Integer den_lcm = 1;
    Integer num_gcd = 0;
    for (const Rational* c : coords) {
        if (*c == 0) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c->get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c->get_num_mpz_t());
    }
    if (num_gcd == 0) return z;
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (factor == 1) return z;
    return QuadScalar(factor) * z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    static const std::regex pattern(R"(^-?[0-9]+(/[0-9]+)?$)");
    const std::string s(trim(text));
    if (!std::regex_match(s, pattern)) {
        throw PreconditionError("not a rational number: '" + s + "'");
    }
    Rational q;
    q.set_str(s, 10);
    if (q.get_den() == 0) throw PreconditionError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int sign(const Rational& q) { return sgn(q); }

Integer squarefree_part(const Integer& n) {
    if (n <= 0) throw PreconditionError("squarefree_part needs a positive integer");
    Integer rest = n;
    Integer result = 1;
    for (Integer f = 2; f * f <= rest; ++f) {
        int mult = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), f.get_mpz_t())) {
            rest /= f;
            ++mult;
        }
        if (mult % 2 == 1) result *= f;
    }
    return result * rest;
}

// ---------------------------------------------------------------------------

QuadScalar::QuadScalar(Rational a, Rational b, long radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(radicand) {
    if (radicand < 1) throw PreconditionError("radicand must be a positive square-free integer");
    if (radicand == 1) {
        a_ += b_;
        b_ = 0;
        return;
    }
    if (squarefree_part(Integer(radicand)) != radicand) {
        throw PreconditionError("radicand " + std::to_string(radicand) + " is not square-free");
    }
}

long QuadScalar::join_radicand(const QuadScalar& x, const QuadScalar& y) {
    if (x.d_ == y.d_) return x.d_;
    if (x.d_ == 1) return y.d_;
    if (y.d_ == 1) return x.d_;
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    throw PreconditionError("mixed quadratic extensions sqrt(" + std::to_string(x.d_) + ") and sqrt(" +
                            std::to_string(y.d_) + ")");
}

QuadScalar operator+(const QuadScalar& x, const QuadScalar& y) {
    const long d = QuadScalar::join_radicand(x, y);
    return QuadScalar(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadScalar operator-(const QuadScalar& x, const QuadScalar& y) {
    const long d = QuadScalar::join_radicand(x, y);
    return QuadScalar(x.a_ - y.a_, x.b_ - y.b_, d);
}

QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
    const long d = QuadScalar::join_radicand(x, y);
    return QuadScalar(x.a_ * y.a_ + Rational(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadScalar operator/(const QuadScalar& x, const QuadScalar& y) {
    if (y.is_zero()) throw PreconditionError("division by zero");
    const Rational n = y.norm();
    QuadScalar num = x * y.conjugate();
    return QuadScalar(num.a_ / n, num.b_ / n, num.d_);
}

double QuadScalar::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

int sign(const QuadScalar& x) {
    const int sa = sgn(x.rational_part());
    const int sb = sgn(x.surd_part());
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: the larger of a^2 and d b^2 wins. Equality is impossible
    // for square-free d > 1 and nonzero a, b.
    const Rational a2 = x.rational_part() * x.rational_part();
    const Rational db2 = Rational(x.radicand()) * x.surd_part() * x.surd_part();
    return a2 > db2 ? sa : sb;
}

std::string to_string(const QuadScalar& x) {
    if (x.is_rational()) return to_string(x.rational_part());
    std::string out = "(" + to_string(x.rational_part());
    if (x.surd_part() >= 0) out += "+";
    out += to_string(x.surd_part());
    out += kSqrtSign;
    out += std::to_string(x.radicand()) + ")";
    return out;
}

QuadScalar parse_quad(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty() || s.front() != '(') return parse_rational(s);
    if (s.back() != ')') throw PreconditionError("unbalanced parenthesis in '" + std::string(s) + "'");
    s = trim(s.substr(1, s.size() - 2));

    std::size_t root = s.find(kSqrtSign);
    std::size_t root_len = kSqrtSign.size();
    bool paren_form = false;
    if (root == std::string_view::npos) {
        root = s.find("*sqrt(");
        root_len = 6;
        paren_form = true;
    }
    if (root == std::string_view::npos) {
        throw PreconditionError("expected a+b√D in '" + std::string(text) + "'");
    }
    std::string_view radicand_text = s.substr(root + root_len);
    if (paren_form) {
        if (radicand_text.empty() || radicand_text.back() != ')') {
            throw PreconditionError("bad sqrt(...) in '" + std::string(text) + "'");
        }
        radicand_text.remove_suffix(1);
    }
    const std::string_view head = s.substr(0, root);
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 1; i < head.size(); ++i) {
        if (head[i] == '+' || head[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) {
        throw PreconditionError("expected a+b√D in '" + std::string(text) + "'");
    }
    const Rational a = parse_rational(head.substr(0, split));
    std::string_view b_text = head.substr(split);
    if (b_text.front() == '+') b_text.remove_prefix(1);
    const Rational b = parse_rational(b_text);
    const Rational d = parse_rational(radicand_text);
    if (d.get_den() != 1 || !d.get_num().fits_slong_p()) {
        throw PreconditionError("radicand must be a small integer in '" + std::string(text) + "'");
    }
    return QuadScalar(a, b, d.get_num().get_si());
}

// ---------------------------------------------------------------------------

double ExactComplex::abs() const { return std::sqrt(norm2().to_double()); }

double ExactComplex::arg() const { return std::atan2(im.to_double(), re.to_double()); }

ExactComplex operator/(const ExactComplex& z, const ExactComplex& w) {
    const QuadScalar n = w.norm2();
    if (n.is_zero()) throw PreconditionError("complex division by zero");
    const ExactComplex num = z * w.conj();
    return {num.re / n, num.im / n};
}

QuadScalar cross(const ExactComplex& z, const ExactComplex& w) { return z.re * w.im - z.im * w.re; }

QuadScalar dot(const ExactComplex& z, const ExactComplex& w) { return z.re * w.re + z.im * w.im; }

std::string to_string(const ExactComplex& z) {
    std::string out = to_string(z.re);
    if (sign(z.im) < 0) {
        out += " - " + to_string(-z.im) + " i";
    } else {
        out += " + " + to_string(z.im) + " i";
    }
    return out;
}

ExactComplex parse_complex(std::string_view re, std::string_view im) {
    return {parse_quad(re), parse_quad(im)};
}

bool in_strict_upper_half(const ExactComplex& z) {
    const int s = sign(z.im);
    return s > 0 || (s == 0 && sign(z.re) < 0);
}

// ---------------------------------------------------------------------------

PhaseKey::PhaseKey(long shift, ExactComplex dir) : k_(shift) {
    if (!in_strict_upper_half(dir)) {
        throw PreconditionError("phase direction " + to_string(dir) + " is not in the strict upper half-plane");
    }
    dir_ = normalize_scale(dir);
}

PhaseKey PhaseKey::principal(const ExactComplex& z) {
    if (z.is_zero()) throw PreconditionError("the zero vector has no phase");
    if (in_strict_upper_half(z)) return PhaseKey(0, z);
    return PhaseKey(-1, -z);
}

PhaseKey PhaseKey::integer(long n) { return PhaseKey(n - 1, ExactComplex(-1, 0)); }

ExactComplex PhaseKey::direction() const { return (k_ % 2 == 0) ? dir_ : -dir_; }

bool PhaseKey::is_integer() const { return dir_.im.is_zero(); }

long PhaseKey::floor() const { return is_integer() ? k_ + 1 : k_; }

double PhaseKey::to_double() const {
    return static_cast<double>(k_) + dir_.arg() / std::numbers::pi;
}

PhaseKey PhaseKey::operator-() const {
    if (is_integer()) return PhaseKey(-k_ - 2, dir_, raw_tag{});
    return PhaseKey(-k_ - 1, ExactComplex(-dir_.re, dir_.im), raw_tag{});
}

PhaseKey operator+(const PhaseKey& p, const PhaseKey& q) {
    const ExactComplex prod = p.dir_ * q.dir_;
    if (in_strict_upper_half(prod)) return PhaseKey(p.k_ + q.k_, prod);
    return PhaseKey(p.k_ + q.k_ + 1, -prod);
}

std::strong_ordering operator<=>(const PhaseKey& p, const PhaseKey& q) {
    if (p.k_ != q.k_) return p.k_ <=> q.k_;
    // Both arguments lie in (0, pi], so the sign of the cross product orders them.
    const int s = sign(cross(p.dir_, q.dir_));
    if (s > 0) return std::strong_ordering::less;
    if (s < 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering cmp_phase(const PhaseKey& p, const PhaseKey& q) { return p <=> q; }

PhaseKey abs(const PhaseKey& p) { return p < PhaseKey::integer(0) ? -p : p; }

PhaseKey ccw_displacement(const ExactComplex& from, const ExactComplex& to) {
    if (from.is_zero() || to.is_zero()) throw PreconditionError("displacement between zero vectors");
    const ExactComplex w = to * from.conj();
    if (w.im.is_zero() && sign(w.re) > 0) return PhaseKey::integer(0);
    if (in_strict_upper_half(w)) return PhaseKey(0, w);
    return PhaseKey(1, -w);
}

AngleOrder compare_with_rational(const PhaseKey& p, const Rational& r) {
    Integer n;
    mpz_fdiv_q(n.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    if (!n.fits_slong_p()) throw PreconditionError("rational endpoint out of range");
    const Rational frac = r - Rational(n);
    const PhaseKey y = p - n.get_si();
    auto from_ordering = [](std::strong_ordering o) {
        if (o == std::strong_ordering::less) return AngleOrder::less;
        if (o == std::strong_ordering::greater) return AngleOrder::greater;
        return AngleOrder::equal;
    };
    if (frac == 0) return from_ordering(y <=> PhaseKey::integer(0));
    // 0 < frac < 1 from here on.
    if (y.shift() >= 1) return AngleOrder::greater;
    if (y.shift() <= -1) return AngleOrder::less;
    const Rational quarters = frac * 4;
    if (quarters.get_den() == 1) {
        const long q = quarters.get_num().get_si();
        const ExactComplex dir = q == 1 ? ExactComplex(1, 1) : q == 2 ? ExactComplex(0, 1) : ExactComplex(-1, 1);
        return from_ordering(y <=> PhaseKey(0, dir));
    }
    const double diff = y.to_double() - frac.get_d();
    if (std::fabs(diff) < std::ldexp(1.0, -40)) return AngleOrder::undecided;
    return diff < 0 ? AngleOrder::less : AngleOrder::greater;
}

}  // namespace stab
