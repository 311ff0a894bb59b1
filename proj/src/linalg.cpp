#include "stabkit/linalg.hpp"

#include "stabkit/errors.hpp"

namespace stab {

Field Field::prime(int p) {
    if (p != 2 && p != 3 && p != 5 && p != 7) {
        throw PreconditionError("unsupported field F" + std::to_string(p) + " (use F2, F3, F5, F7 or Q)");
    }
    return Field(p);
}

Rational Field::reduce(const Rational& x) const {
    if (p_ == 0) return x;
    const Integer p = p_;
    Integer num = x.get_num() % p;
    if (num < 0) num += p;
    if (x.get_den() == 1) return Rational(num);
    Integer den = x.get_den() % p;
    Integer den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
        throw PreconditionError("denominator divisible by p in F" + std::to_string(p_));
    }
    Integer r = (num * den_inv) % p;
    return Rational(r);
}

Rational Field::inv(const Rational& x) const {
    if (x == 0) throw InvariantViolation("inverse of zero");
    if (p_ == 0) return 1 / x;
    const Integer p = p_;
    Integer r;
    Integer xi = x.get_num();
    mpz_invert(r.get_mpz_t(), xi.get_mpz_t(), p.get_mpz_t());
    return Rational(r);
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void Matrix::append_row(const std::vector<Rational>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw InvariantViolation("append_row: width mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_) {
        if (x != 0) return false;
    }
    return true;
}

Matrix multiply(const Matrix& a, const Matrix& b, const Field& f) {
    if (a.cols() != b.rows()) throw InvariantViolation("multiply: shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            c(i, j) = f.reduce(s);
        }
    }
    return c;
}

std::vector<Rational> apply(const Matrix& m, const std::vector<Rational>& v, const Field& f) {
    if (m.cols() != v.size()) throw InvariantViolation("apply: shape mismatch");
    std::vector<Rational> out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational s = 0;
        for (std::size_t k = 0; k < m.cols(); ++k) s += m(i, k) * v[k];
        out[i] = f.reduce(s);
    }
    return out;
}

Matrix rref(Matrix m, const Field& f, std::vector<std::size_t>* pivots) {
    std::vector<std::size_t> piv;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t r = lead;
        while (r < m.rows() && m(r, c) == 0) ++r;
        if (r == m.rows()) continue;
        if (r != lead) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(lead, j));
        }
        const Rational inv = f.inv(m(lead, c));
        for (std::size_t j = 0; j < m.cols(); ++j) m(lead, j) = f.mul(m(lead, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == lead || m(i, c) == 0) continue;
            const Rational factor = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(lead, j)));
        }
        piv.push_back(c);
        ++lead;
    }
    Matrix out(lead, m.cols());
    for (std::size_t i = 0; i < lead; ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    }
    if (pivots) *pivots = std::move(piv);
    return out;
}

std::size_t rank(const Matrix& m, const Field& f) { return rref(m, f).rows(); }

std::vector<std::size_t> pivot_columns(const Matrix& echelon) {
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < echelon.rows(); ++i) {
        std::size_t j = 0;
        while (j < echelon.cols() && echelon(i, j) == 0) ++j;
        if (j == echelon.cols()) throw InvariantViolation("pivot_columns: zero row in echelon form");
        piv.push_back(j);
    }
    return piv;
}

std::vector<Rational> reduce_by(const Matrix& echelon, const std::vector<std::size_t>& pivots,
                                std::vector<Rational> v, const Field& f) {
    for (std::size_t i = 0; i < echelon.rows(); ++i) {
        const Rational c = v[pivots[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < echelon.cols(); ++j) v[j] = f.sub(v[j], f.mul(c, echelon(i, j)));
    }
    return v;
}

bool in_row_space(const Matrix& echelon, const std::vector<std::size_t>& pivots, const std::vector<Rational>& v,
                  const Field& f) {
    for (const auto& x : reduce_by(echelon, pivots, v, f)) {
        if (x != 0) return false;
    }
    return true;
}

bool row_space_contains(const Matrix& outer, const Matrix& inner, const Field& f) {
    const auto piv = pivot_columns(outer);
    for (std::size_t i = 0; i < inner.rows(); ++i) {
        if (!in_row_space(outer, piv, inner.row(i), f)) return false;
    }
    return true;
}

std::string to_string(const Matrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ",";
            out += to_string(m(i, j));
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace stab
