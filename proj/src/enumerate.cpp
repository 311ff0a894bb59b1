#include "stabkit/enumerate.hpp"

#include <algorithm>
#include <map>

#include "stabkit/errors.hpp"

namespace stab {

namespace {

using Row = std::vector<int>;

struct FpSubspace {
    std::vector<Row> rows;
    std::vector<std::size_t> pivots;
};

void next_combination_rec(std::size_t d, std::size_t r, std::size_t start, std::vector<std::size_t>& cur,
                          std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == r) {
        out.push_back(cur);
        return;
    }
    for (std::size_t c = start; c < d; ++c) {
        cur.push_back(c);
        next_combination_rec(d, r, c + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<FpSubspace> all_subspaces(int p, std::size_t d) {
    std::vector<FpSubspace> out;
    for (std::size_t r = 0; r <= d; ++r) {
        std::vector<std::vector<std::size_t>> combos;
        std::vector<std::size_t> cur;
        next_combination_rec(d, r, 0, cur, combos);
        for (const auto& piv : combos) {
            std::vector<std::pair<std::size_t, std::size_t>> free;
            for (std::size_t t = 0; t < r; ++t) {
                for (std::size_t c = piv[t] + 1; c < d; ++c) {
                    if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.push_back({t, c});
                }
            }
            std::vector<int> digits(free.size(), 0);
            while (true) {
                FpSubspace s;
                s.pivots = piv;
                s.rows.assign(r, Row(d, 0));
                for (std::size_t t = 0; t < r; ++t) s.rows[t][piv[t]] = 1;
                for (std::size_t f = 0; f < free.size(); ++f) s.rows[free[f].first][free[f].second] = digits[f];
                out.push_back(std::move(s));
                // Odometer with the first free entry most significant.
                std::size_t pos = free.size();
                bool carry = true;
                while (carry && pos > 0) {
                    --pos;
                    if (++digits[pos] < p) {
                        carry = false;
                    } else {
                        digits[pos] = 0;
                    }
                }
                if (carry) break;
            }
        }
    }
    return out;
}

struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<int> a;
};

struct Kernel {
    int p = 2;
    std::size_t n = 0;
    std::vector<const std::vector<FpSubspace>*> candidates;
    std::vector<IntMatrix> maps;
    std::vector<std::pair<std::size_t, std::size_t>> ends;  // (source, target)
    std::vector<std::vector<std::size_t>> checks;            // arrows completed at vertex v
};

bool in_span(const FpSubspace& s, Row v, int p) {
    for (std::size_t t = 0; t < s.rows.size(); ++t) {
        const int c = v[s.pivots[t]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = ((v[j] - c * s.rows[t][j]) % p + p) % p;
    }
    for (int x : v) {
        if (x != 0) return false;
    }
    return true;
}

bool arrow_ok(const Kernel& k, std::size_t arrow, const std::vector<std::size_t>& idx) {
    const auto [src, tgt] = k.ends[arrow];
    const FpSubspace& s = (*k.candidates[src])[idx[src]];
    const FpSubspace& t = (*k.candidates[tgt])[idx[tgt]];
    const IntMatrix& m = k.maps[arrow];
    for (const Row& u : s.rows) {
        Row image(m.rows, 0);
        for (std::size_t i = 0; i < m.rows; ++i) {
            int acc = 0;
            for (std::size_t j = 0; j < m.cols; ++j) acc += m.a[i * m.cols + j] * u[j];
            image[i] = acc % k.p;
        }
        if (!in_span(t, std::move(image), k.p)) return false;
    }
    return true;
}

void extend(const Kernel& k, std::size_t vertex, std::vector<std::size_t>& idx,
            std::vector<std::vector<std::size_t>>& out) {
    if (vertex == k.n) {
        out.push_back(idx);
        return;
    }
    const auto& cands = *k.candidates[vertex];
    for (std::size_t c = 0; c < cands.size(); ++c) {
        idx[vertex] = c;
        bool ok = true;
        for (std::size_t arrow : k.checks[vertex]) {
            if (!arrow_ok(k, arrow, idx)) {
                ok = false;
                break;
            }
        }
        if (ok) extend(k, vertex + 1, idx, out);
    }
}

class Enumerator {
public:
    Enumerator(const QuiverRep& rep, const EnumerationOptions& opts) : rep_(rep) {
        if (!rep.field().is_finite()) {
            throw PreconditionError("submodule enumeration needs a finite field (got " + rep.field().name() + ")");
        }
        if (rep.total_dimension() > opts.cap) {
            throw PreconditionError("total dimension " + std::to_string(rep.total_dimension()) +
                                    " exceeds the enumeration cap " + std::to_string(opts.cap));
        }
        kernel_.p = rep.field().characteristic();
        kernel_.n = rep.dims().size();
        for (std::size_t v = 0; v < kernel_.n; ++v) {
            const auto d = static_cast<std::size_t>(rep.dims()[v]);
            auto it = tables_.find(d);
            if (it == tables_.end()) it = tables_.emplace(d, all_subspaces(kernel_.p, d)).first;
            kernel_.candidates.push_back(&it->second);
        }
        kernel_.checks.assign(kernel_.n, {});
        const auto& arrows = rep.quiver().arrows();
        for (std::size_t a = 0; a < arrows.size(); ++a) {
            const Matrix& m = rep.map(a);
            IntMatrix im{m.rows(), m.cols(), std::vector<int>(m.rows() * m.cols())};
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    im.a[i * m.cols() + j] = static_cast<int>(m(i, j).get_num().get_si());
            kernel_.maps.push_back(std::move(im));
            kernel_.ends.push_back({arrows[a].source, arrows[a].target});
            kernel_.checks[std::max(arrows[a].source, arrows[a].target)].push_back(a);
        }
    }

    std::vector<std::vector<std::size_t>> run_serial() const {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> idx(kernel_.n, 0);
        extend(kernel_, 0, idx, out);
        return out;
    }

    std::vector<std::vector<std::size_t>> run_parallel() const {
        const auto& first = *kernel_.candidates[0];
        const auto count = static_cast<long>(first.size());
        std::vector<std::vector<std::vector<std::size_t>>> partial(first.size());
#pragma omp parallel for schedule(dynamic)
        for (long c = 0; c < count; ++c) {
            std::vector<std::size_t> idx(kernel_.n, 0);
            idx[0] = static_cast<std::size_t>(c);
            extend(kernel_, 1, idx, partial[static_cast<std::size_t>(c)]);
        }
        std::vector<std::vector<std::size_t>> out;
        for (auto& part : partial) {
            for (auto& x : part) out.push_back(std::move(x));
        }
        return out;
    }

    std::vector<Submodule> materialize(const std::vector<std::vector<std::size_t>>& tuples) const {
        std::vector<Submodule> subs;
        subs.reserve(tuples.size());
        for (const auto& idx : tuples) {
            std::vector<Matrix> bases;
            for (std::size_t v = 0; v < kernel_.n; ++v) {
                const FpSubspace& s = (*kernel_.candidates[v])[idx[v]];
                Matrix m(s.rows.size(), static_cast<std::size_t>(rep_.dims()[v]));
                for (std::size_t i = 0; i < s.rows.size(); ++i)
                    for (std::size_t j = 0; j < s.rows[i].size(); ++j) m(i, j) = s.rows[i][j];
                bases.push_back(std::move(m));
            }
            subs.emplace_back(std::move(bases));
        }
        return subs;
    }

private:
    const QuiverRep& rep_;
    std::map<std::size_t, std::vector<FpSubspace>> tables_;
    Kernel kernel_;
};

}  // namespace

std::vector<Submodule> enumerate_submodules(const QuiverRep& rep, EnumerationOptions opts) {
    Enumerator e(rep, opts);
    return e.materialize(e.run_parallel());
}

std::vector<Submodule> enumerate_submodules_serial(const QuiverRep& rep, EnumerationOptions opts) {
    Enumerator e(rep, opts);
    return e.materialize(e.run_serial());
}

std::vector<ShortExactSequence> all_ses(const QuiverRep& rep, EnumerationOptions opts) {
    std::vector<ShortExactSequence> out;
    for (auto& sub : enumerate_submodules(rep, opts)) {
        if (sub.dims().is_zero() || sub.dims() == rep.dims()) continue;
        QuiverRep q = quotient(rep, sub);
        out.push_back({std::move(sub), std::move(q)});
    }
    return out;
}

std::size_t subspace_count(int p, std::size_t d) {
    // Gaussian binomials via the recurrence [d,k] = [d-1,k-1] + p^k [d-1,k].
    std::vector<std::vector<std::size_t>> g(d + 1, std::vector<std::size_t>(d + 1, 0));
    for (std::size_t m = 0; m <= d; ++m) {
        g[m][0] = 1;
        for (std::size_t k = 1; k <= m; ++k) {
            std::size_t pk = 1;
            for (std::size_t t = 0; t < k; ++t) pk *= static_cast<std::size_t>(p);
            g[m][k] = g[m - 1][k - 1] + (k <= m - 1 ? pk * g[m - 1][k] : 0);
        }
    }
    std::size_t total = 0;
    for (std::size_t k = 0; k <= d; ++k) total += g[d][k];
    return total;
}

}  // namespace stab
