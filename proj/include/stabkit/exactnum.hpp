#pragma once

// Exact scalars and the phase predicates everything else is built on.
//
// Phases are never stored as reals. A phase is a PhaseKey (k, dir) standing
// for k + arg(dir)/pi with dir in the strict upper half-plane, so that
// arg(dir)/pi lies in (0, 1]. Every real number has such a representation
// (the integer n is (n - 1, -1)), which makes PhaseKeys closed under
// addition and negation.

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stab {

using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
int sign(const Rational& q);

// Largest square-free divisor decomposition: n = s^2 * d with d square-free.
// Returns d. n must be positive.
Integer squarefree_part(const Integer& n);

// a + b*sqrt(d), d square-free and positive. d == 1 is the rational field
// and forces b == 0. Mixing two different radicands throws.
class QuadScalar {
public:
    QuadScalar() = default;
    QuadScalar(const Rational& a) : a_(a) {}  // NOLINT: implicit by design of the field embedding
    QuadScalar(long a) : a_(a) {}             // NOLINT
    QuadScalar(Rational a, Rational b, long radicand);

    static QuadScalar sqrt_of(long radicand) { return {0, 1, radicand}; }

    const Rational& rational_part() const noexcept { return a_; }
    const Rational& surd_part() const noexcept { return b_; }
    long radicand() const noexcept { return d_; }
    bool is_rational() const noexcept { return b_ == 0; }
    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }

    QuadScalar conjugate() const { return QuadScalar(a_, -b_, d_); }
    // Field norm a^2 - d b^2; nonzero for nonzero elements.
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    QuadScalar operator-() const { return QuadScalar(-a_, -b_, d_); }
    friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y);
    friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y);
    friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y);
    friend QuadScalar operator/(const QuadScalar& x, const QuadScalar& y);
    QuadScalar& operator+=(const QuadScalar& y) { return *this = *this + y; }
    QuadScalar& operator-=(const QuadScalar& y) { return *this = *this - y; }
    QuadScalar& operator*=(const QuadScalar& y) { return *this = *this * y; }

    friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    double to_double() const;

private:
    static long join_radicand(const QuadScalar& x, const QuadScalar& y);

    Rational a_{0};
    Rational b_{0};
    long d_ = 1;
};

int sign(const QuadScalar& x);
std::string to_string(const QuadScalar& x);
// Accepts "p/q" or the "(a+b√D)" / "(a+b*sqrt(D))" forms written by to_string.
QuadScalar parse_quad(std::string_view text);

struct ExactComplex {
    QuadScalar re;
    QuadScalar im;

    ExactComplex() = default;
    ExactComplex(QuadScalar r, QuadScalar i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
    bool is_rational() const noexcept { return re.is_rational() && im.is_rational(); }
    ExactComplex conj() const { return {re, -im}; }
    QuadScalar norm2() const { return re * re + im * im; }
    double abs() const;
    double arg() const;

    ExactComplex operator-() const { return {-re, -im}; }
    friend ExactComplex operator+(const ExactComplex& z, const ExactComplex& w) {
        return {z.re + w.re, z.im + w.im};
    }
    friend ExactComplex operator-(const ExactComplex& z, const ExactComplex& w) {
        return {z.re - w.re, z.im - w.im};
    }
    friend ExactComplex operator*(const ExactComplex& z, const ExactComplex& w) {
        return {z.re * w.re - z.im * w.im, z.re * w.im + z.im * w.re};
    }
    friend ExactComplex operator*(const QuadScalar& s, const ExactComplex& z) {
        return {s * z.re, s * z.im};
    }
    friend ExactComplex operator/(const ExactComplex& z, const ExactComplex& w);
    ExactComplex& operator+=(const ExactComplex& w) { return *this = *this + w; }

    friend bool operator==(const ExactComplex& z, const ExactComplex& w) {
        return z.re == w.re && z.im == w.im;
    }
};

// Im(conj(z) * w) = re_z im_w - im_z re_w.
QuadScalar cross(const ExactComplex& z, const ExactComplex& w);
QuadScalar dot(const ExactComplex& z, const ExactComplex& w);

std::string to_string(const ExactComplex& z);
ExactComplex parse_complex(std::string_view re, std::string_view im);

// z = r exp(i pi phi) with r > 0 and phi in (0, 1]. Zero is excluded.
bool in_strict_upper_half(const ExactComplex& z);

class PhaseKey {
public:
    // dir must lie in the strict upper half-plane.
    PhaseKey(long shift, ExactComplex dir);

    // The phase of a nonzero z taken in (-1, 1].
    static PhaseKey principal(const ExactComplex& z);
    static PhaseKey integer(long n);

    long shift() const noexcept { return k_; }
    const ExactComplex& dir() const noexcept { return dir_; }
    // A complex number with argument pi * value(); (-1)^k dir.
    ExactComplex direction() const;

    bool is_integer() const;
    long floor() const;
    double to_double() const;

    PhaseKey operator-() const;
    PhaseKey operator+(long n) const { return PhaseKey(k_ + n, dir_, raw_tag{}); }
    PhaseKey operator-(long n) const { return PhaseKey(k_ - n, dir_, raw_tag{}); }
    friend PhaseKey operator+(const PhaseKey& p, const PhaseKey& q);
    friend PhaseKey operator-(const PhaseKey& p, const PhaseKey& q) { return p + (-q); }

    friend std::strong_ordering operator<=>(const PhaseKey& p, const PhaseKey& q);
    friend bool operator==(const PhaseKey& p, const PhaseKey& q) {
        return (p <=> q) == std::strong_ordering::equal;
    }

private:
    struct raw_tag {};
    PhaseKey(long shift, ExactComplex dir, raw_tag) : k_(shift), dir_(std::move(dir)) {}

    long k_ = 0;
    ExactComplex dir_;
};

std::strong_ordering cmp_phase(const PhaseKey& p, const PhaseKey& q);
PhaseKey abs(const PhaseKey& p);

// Counterclockwise displacement from ray(from) to ray(to) in half-turns,
// a value in [0, 2). Zero exactly when the rays coincide.
PhaseKey ccw_displacement(const ExactComplex& from, const ExactComplex& to);

enum class AngleOrder { less, equal, greater, undecided };

// Compares a phase with a rational number. Exact whenever the fractional
// part of the rational is a multiple of 1/4 (the direction is then exactly
// representable); otherwise decided in floating point with a 2^-40 guard
// band, returning `undecided` inside the band.
AngleOrder compare_with_rational(const PhaseKey& p, const Rational& r);

}  // namespace stab
