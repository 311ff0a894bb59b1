#include "stabkit/quiver.hpp"

#include <algorithm>
#include <numeric>

#include "stabkit/errors.hpp"

namespace stab {

long DimVector::total() const { return std::accumulate(v_.begin(), v_.end(), 0L); }

bool DimVector::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](long x) { return x == 0; });
}

bool DimVector::is_nonnegative() const {
    return std::all_of(v_.begin(), v_.end(), [](long x) { return x >= 0; });
}

bool DimVector::bounded_by(const DimVector& other) const {
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (v_[i] > other.v_[i]) return false;
    }
    return true;
}

DimVector operator+(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw PreconditionError("dimension vector length mismatch");
    DimVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

DimVector operator-(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw PreconditionError("dimension vector length mismatch");
    DimVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

DimVector operator*(long s, const DimVector& a) {
    DimVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
    return c;
}

std::string to_string(const DimVector& d) {
    std::string out = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(d[i]);
    }
    return out + ")";
}

bool proportional(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw PreconditionError("dimension vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[i] * b[j] != a[j] * b[i]) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

Quiver::Quiver(std::size_t vertices, std::vector<Arrow> arrows) : n_(vertices), arrows_(std::move(arrows)) {
    if (n_ == 0) throw PreconditionError("quiver needs at least one vertex");
    for (const auto& a : arrows_) {
        if (a.source >= n_ || a.target >= n_) {
            throw PreconditionError("arrow '" + a.name + "' has an endpoint outside 1.." + std::to_string(n_));
        }
    }
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        for (std::size_t j = i + 1; j < arrows_.size(); ++j) {
            if (arrows_[i].name == arrows_[j].name) {
                throw PreconditionError("duplicate arrow name '" + arrows_[i].name + "'");
            }
        }
    }

    // DFS with colours; a grey->grey edge closes a cycle.
    std::vector<int> colour(n_, 0);
    std::vector<std::size_t> via(n_, 0);  // arrow used to enter a vertex
    std::vector<std::size_t> post;
    std::vector<std::pair<std::size_t, std::size_t>> stack;  // (vertex, next arrow index)
    for (std::size_t root = 0; root < n_; ++root) {
        if (colour[root] != 0) continue;
        stack.push_back({root, 0});
        colour[root] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next == arrows_.size()) {
                colour[v] = 2;
                post.push_back(v);
                stack.pop_back();
                continue;
            }
            const Arrow& a = arrows_[next++];
            if (a.source != v) continue;
            if (colour[a.target] == 1) {
                std::string cycle = a.name;
                std::size_t w = v;
                while (w != a.target) {
                    cycle = arrows_[via[w]].name + " " + cycle;
                    w = arrows_[via[w]].source;
                }
                throw PreconditionError("quiver has a directed cycle through arrows [" + cycle +
                                        "] (vertex " + std::to_string(a.target + 1) + ")");
            }
            if (colour[a.target] == 0) {
                colour[a.target] = 1;
                via[a.target] = static_cast<std::size_t>(&a - arrows_.data());
                stack.push_back({a.target, 0});
            }
        }
    }
    topo_.assign(post.rbegin(), post.rend());
}

Quiver Quiver::a_n(std::size_t n) {
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i + 1 < n; ++i) arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
    return Quiver(n, std::move(arrows));
}

Quiver Quiver::kronecker() { return Quiver(2, {{"a", 0, 1}, {"b", 0, 1}}); }

std::size_t Quiver::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        if (arrows_[i].name == name) return i;
    }
    throw PreconditionError("unknown arrow '" + name + "'");
}

bool operator==(const Quiver& a, const Quiver& b) {
    if (a.n_ != b.n_ || a.arrows_.size() != b.arrows_.size()) return false;
    for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
        const auto& x = a.arrows_[i];
        const auto& y = b.arrows_[i];
        if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
    }
    return true;
}

long euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
    if (a.size() != q.vertex_count() || b.size() != q.vertex_count()) {
        throw PreconditionError("euler_form: dimension vectors must have length " +
                                std::to_string(q.vertex_count()));
    }
    long chi = 0;
    for (std::size_t i = 0; i < a.size(); ++i) chi += a[i] * b[i];
    for (const auto& arr : q.arrows()) chi -= a[arr.source] * b[arr.target];
    return chi;
}

// ---------------------------------------------------------------------------

QuiverRep::QuiverRep(std::shared_ptr<const Quiver> quiver, Field field, DimVector dims, std::vector<Matrix> maps)
    : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
    const Quiver& q = *quiver_;
    if (dims_.size() != q.vertex_count()) {
        throw PreconditionError("representation needs " + std::to_string(q.vertex_count()) + " dimensions");
    }
    if (!dims_.is_nonnegative()) throw PreconditionError("negative dimension in representation");
    if (maps_.size() != q.arrows().size()) throw PreconditionError("one matrix per arrow is required");
    for (std::size_t k = 0; k < maps_.size(); ++k) {
        const Arrow& a = q.arrows()[k];
        Matrix& m = maps_[k];
        const auto rows = static_cast<std::size_t>(dims_[a.target]);
        const auto cols = static_cast<std::size_t>(dims_[a.source]);
        if (m.rows() == 0 && m.cols() == 0 && (rows == 0 || cols == 0)) m = Matrix(rows, cols);
        if (m.rows() != rows || m.cols() != cols) {
            throw PreconditionError("arrow '" + a.name + "' needs a " + std::to_string(rows) + "x" +
                                    std::to_string(cols) + " matrix, got " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()));
        }
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = field_.reduce(m(i, j));
        }
    }
}

QuiverRep QuiverRep::zero(std::shared_ptr<const Quiver> quiver, Field field) {
    const std::size_t n = quiver->vertex_count();
    std::vector<Matrix> maps(quiver->arrows().size());
    return QuiverRep(std::move(quiver), field, DimVector(n), std::move(maps));
}

QuiverRep QuiverRep::simple(std::shared_ptr<const Quiver> quiver, Field field, std::size_t vertex) {
    DimVector d(quiver->vertex_count());
    d[vertex] = 1;
    std::vector<Matrix> maps;
    for (const auto& a : quiver->arrows()) {
        maps.emplace_back(static_cast<std::size_t>(d[a.target]), static_cast<std::size_t>(d[a.source]));
    }
    return QuiverRep(std::move(quiver), field, std::move(d), std::move(maps));
}

bool operator==(const QuiverRep& a, const QuiverRep& b) {
    return *a.quiver_ == *b.quiver_ && a.field_ == b.field_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
}

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
    if (!(a.quiver() == b.quiver()) || !(a.field() == b.field())) {
        throw PreconditionError("direct_sum: representations over different quivers or fields");
    }
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < a.maps().size(); ++k) {
        const Matrix& x = a.map(k);
        const Matrix& y = b.map(k);
        Matrix m(x.rows() + y.rows(), x.cols() + y.cols());
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) = x(i, j);
        for (std::size_t i = 0; i < y.rows(); ++i)
            for (std::size_t j = 0; j < y.cols(); ++j) m(x.rows() + i, x.cols() + j) = y(i, j);
        maps.push_back(std::move(m));
    }
    return QuiverRep(a.quiver_ptr(), a.field(), a.dims() + b.dims(), std::move(maps));
}

// ---------------------------------------------------------------------------

Submodule::Submodule(std::vector<Matrix> bases) : bases_(std::move(bases)), dims_(bases_.size()) {
    for (std::size_t i = 0; i < bases_.size(); ++i) dims_[i] = static_cast<long>(bases_[i].rows());
}

Submodule Submodule::zero(const QuiverRep& rep) {
    std::vector<Matrix> b;
    for (long d : rep.dims().values()) b.emplace_back(0, static_cast<std::size_t>(d));
    return Submodule(std::move(b));
}

Submodule Submodule::whole(const QuiverRep& rep) {
    std::vector<Matrix> b;
    for (long d : rep.dims().values()) b.push_back(Matrix::identity(static_cast<std::size_t>(d)));
    return Submodule(std::move(b));
}

Submodule span_submodule(const QuiverRep& rep, const std::vector<Matrix>& spanning_rows) {
    if (spanning_rows.size() != rep.dims().size()) throw PreconditionError("one basis per vertex is required");
    std::vector<Matrix> b;
    for (std::size_t i = 0; i < spanning_rows.size(); ++i) {
        if (spanning_rows[i].rows() > 0 && spanning_rows[i].cols() != static_cast<std::size_t>(rep.dims()[i])) {
            throw PreconditionError("basis at vertex " + std::to_string(i + 1) + " has the wrong width");
        }
        Matrix m = spanning_rows[i];
        if (m.rows() == 0) m = Matrix(0, static_cast<std::size_t>(rep.dims()[i]));
        b.push_back(rref(m, rep.field()));
    }
    return Submodule(std::move(b));
}

bool is_invariant(const QuiverRep& rep, const Submodule& sub) {
    const Field& f = rep.field();
    std::vector<std::vector<std::size_t>> piv;
    for (const auto& b : sub.bases()) piv.push_back(pivot_columns(b));
    const auto& arrows = rep.quiver().arrows();
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        const auto& a = arrows[k];
        const Matrix& src = sub.basis(a.source);
        for (std::size_t r = 0; r < src.rows(); ++r) {
            const auto image = apply(rep.map(k), src.row(r), f);
            if (!in_row_space(sub.basis(a.target), piv[a.target], image, f)) return false;
        }
    }
    return true;
}

bool contains(const QuiverRep& rep, const Submodule& outer, const Submodule& inner) {
    for (std::size_t i = 0; i < outer.bases().size(); ++i) {
        if (!row_space_contains(outer.basis(i), inner.basis(i), rep.field())) return false;
    }
    return true;
}

namespace {

std::vector<std::size_t> non_pivots(const Matrix& echelon, std::size_t width) {
    const auto piv = pivot_columns(echelon);
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < width; ++c) {
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) out.push_back(c);
    }
    return out;
}

void require_invariant(const QuiverRep& rep, const Submodule& sub) {
    if (sub.bases().size() != rep.dims().size()) throw PreconditionError("submodule has the wrong number of vertices");
    for (std::size_t i = 0; i < sub.bases().size(); ++i) {
        if (sub.basis(i).cols() != static_cast<std::size_t>(rep.dims()[i])) {
            throw PreconditionError("submodule basis at vertex " + std::to_string(i + 1) + " has the wrong width");
        }
    }
    if (!is_invariant(rep, sub)) throw PreconditionError("subspaces are not invariant under the arrow maps");
}

}  // namespace

QuiverRep quotient(const QuiverRep& rep, const Submodule& sub) {
    require_invariant(rep, sub);
    const Field& f = rep.field();
    const std::size_t n = rep.dims().size();
    std::vector<std::vector<std::size_t>> keep(n), piv(n);
    DimVector qd(n);
    for (std::size_t i = 0; i < n; ++i) {
        keep[i] = non_pivots(sub.basis(i), static_cast<std::size_t>(rep.dims()[i]));
        piv[i] = pivot_columns(sub.basis(i));
        qd[i] = static_cast<long>(keep[i].size());
    }
    std::vector<Matrix> maps;
    const auto& arrows = rep.quiver().arrows();
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        const auto& a = arrows[k];
        Matrix m(keep[a.target].size(), keep[a.source].size());
        for (std::size_t t = 0; t < keep[a.source].size(); ++t) {
            std::vector<Rational> e(static_cast<std::size_t>(rep.dims()[a.source]), Rational(0));
            e[keep[a.source][t]] = 1;
            const auto image = reduce_by(sub.basis(a.target), piv[a.target], apply(rep.map(k), e, f), f);
            for (std::size_t s = 0; s < keep[a.target].size(); ++s) m(s, t) = image[keep[a.target][s]];
        }
        maps.push_back(std::move(m));
    }
    return QuiverRep(rep.quiver_ptr(), f, std::move(qd), std::move(maps));
}

QuiverRep subrepresentation(const QuiverRep& rep, const Submodule& sub) {
    require_invariant(rep, sub);
    const Field& f = rep.field();
    std::vector<Matrix> maps;
    const auto& arrows = rep.quiver().arrows();
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        const auto& a = arrows[k];
        const Matrix& src = sub.basis(a.source);
        const Matrix& tgt = sub.basis(a.target);
        const auto piv = pivot_columns(tgt);
        Matrix m(tgt.rows(), src.rows());
        for (std::size_t t = 0; t < src.rows(); ++t) {
            const auto image = apply(rep.map(k), src.row(t), f);
            for (std::size_t s = 0; s < tgt.rows(); ++s) m(s, t) = image[piv[s]];
        }
        maps.push_back(std::move(m));
    }
    return QuiverRep(rep.quiver_ptr(), f, sub.dims(), std::move(maps));
}

Submodule lift_from_quotient(const QuiverRep& rep, const Submodule& sub, const Submodule& of_quotient) {
    const std::size_t n = rep.dims().size();
    std::vector<Matrix> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto width = static_cast<std::size_t>(rep.dims()[i]);
        const auto keep = non_pivots(sub.basis(i), width);
        Matrix m = sub.basis(i);
        if (m.rows() == 0) m = Matrix(0, width);
        const Matrix& q = of_quotient.basis(i);
        for (std::size_t r = 0; r < q.rows(); ++r) {
            std::vector<Rational> v(width, Rational(0));
            for (std::size_t t = 0; t < keep.size(); ++t) v[keep[t]] = q(r, t);
            m.append_row(v);
        }
        rows[i] = std::move(m);
    }
    return span_submodule(rep, rows);
}

Submodule push_from_sub(const QuiverRep& rep, const Submodule& sub, const Submodule& of_sub) {
    const Field& f = rep.field();
    const std::size_t n = rep.dims().size();
    std::vector<Matrix> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto width = static_cast<std::size_t>(rep.dims()[i]);
        const Matrix& b = sub.basis(i);
        const Matrix& c = of_sub.basis(i);
        Matrix m(0, width);
        for (std::size_t r = 0; r < c.rows(); ++r) {
            std::vector<Rational> v(width, Rational(0));
            for (std::size_t t = 0; t < b.rows(); ++t) {
                if (c(r, t) == 0) continue;
                for (std::size_t j = 0; j < width; ++j) v[j] = f.add(v[j], f.mul(c(r, t), b(t, j)));
            }
            m.append_row(v);
        }
        rows[i] = std::move(m);
    }
    return span_submodule(rep, rows);
}

long hom_dim(const QuiverRep& m, const QuiverRep& n) {
    if (!(m.quiver() == n.quiver())) throw PreconditionError("hom_dim: representations over different quivers");
    if (!(m.field() == n.field())) throw PreconditionError("hom_dim: representations over different fields");
    const Field& f = m.field();
    const std::size_t nv = m.dims().size();
    std::vector<std::size_t> offset(nv + 1, 0);
    for (std::size_t i = 0; i < nv; ++i) {
        offset[i + 1] = offset[i] + static_cast<std::size_t>(m.dims()[i] * n.dims()[i]);
    }
    const std::size_t vars = offset[nv];
    if (vars == 0) return 0;
    // f_i is dimN_i x dimM_i; variable (r, c) of f_i sits at offset[i] + r * dimM_i + c.
    auto var = [&](std::size_t vertex, std::size_t r, std::size_t c) {
        return offset[vertex] + r * static_cast<std::size_t>(m.dims()[vertex]) + c;
    };
    Matrix system(0, vars);
    const auto& arrows = m.quiver().arrows();
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        const auto& a = arrows[k];
        const auto i = a.source;
        const auto j = a.target;
        const auto dmi = static_cast<std::size_t>(m.dims()[i]);
        const auto dmj = static_cast<std::size_t>(m.dims()[j]);
        const auto dni = static_cast<std::size_t>(n.dims()[i]);
        const auto dnj = static_cast<std::size_t>(n.dims()[j]);
        // (N_a f_i - f_j M_a)[r][c] = 0
        for (std::size_t r = 0; r < dnj; ++r) {
            for (std::size_t c = 0; c < dmi; ++c) {
                std::vector<Rational> eq(vars, Rational(0));
                for (std::size_t t = 0; t < dni; ++t) eq[var(i, t, c)] = f.add(eq[var(i, t, c)], n.map(k)(r, t));
                for (std::size_t t = 0; t < dmj; ++t) eq[var(j, r, t)] = f.sub(eq[var(j, r, t)], m.map(k)(t, c));
                system.append_row(eq);
            }
        }
    }
    return static_cast<long>(vars - rank(system, f));
}

long ext1_dim(const QuiverRep& m, const QuiverRep& n) {
    return hom_dim(m, n) - euler_form(m.quiver(), m.dims(), n.dims());
}

}  // namespace stab
