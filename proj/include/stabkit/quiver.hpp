#pragma once

// Acyclic quivers and their finite-dimensional representations over F_p or Q.

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "stabkit/linalg.hpp"

namespace stab {

// A class in K(A) = Z^n, indexed by vertex (0-based internally).
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::size_t n) : v_(n, 0) {}
    DimVector(std::initializer_list<long> xs) : v_(xs) {}
    explicit DimVector(std::vector<long> xs) : v_(std::move(xs)) {}

    std::size_t size() const noexcept { return v_.size(); }
    long operator[](std::size_t i) const { return v_[i]; }
    long& operator[](std::size_t i) { return v_[i]; }
    const std::vector<long>& values() const noexcept { return v_; }

    long total() const;
    bool is_zero() const;
    bool is_nonnegative() const;
    // Componentwise <=.
    bool bounded_by(const DimVector& other) const;

    friend DimVector operator+(const DimVector& a, const DimVector& b);
    friend DimVector operator-(const DimVector& a, const DimVector& b);
    friend DimVector operator*(long s, const DimVector& a);
    friend auto operator<=>(const DimVector&, const DimVector&) = default;
    friend bool operator==(const DimVector&, const DimVector&) = default;

private:
    std::vector<long> v_;
};

std::string to_string(const DimVector& d);
// True when a and b span a rank <= 1 sublattice.
bool proportional(const DimVector& a, const DimVector& b);

struct Arrow {
    std::string name;
    std::size_t source;  // 0-based
    std::size_t target;
};

class Quiver {
public:
    // Throws PreconditionError naming a directed cycle when one exists.
    Quiver(std::size_t vertices, std::vector<Arrow> arrows);

    static Quiver a_n(std::size_t n);  // 1 -> 2 -> ... -> n
    static Quiver kronecker();         // two arrows 1 -> 2

    std::size_t vertex_count() const noexcept { return n_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }
    std::size_t arrow_index(const std::string& name) const;

    friend bool operator==(const Quiver& a, const Quiver& b);

private:
    std::size_t n_;
    std::vector<Arrow> arrows_;
    std::vector<std::size_t> topo_;
};

// Euler form chi(a, b) = sum_i a_i b_i - sum_{arrows i->j} a_i b_j.
long euler_form(const Quiver& q, const DimVector& a, const DimVector& b);

class QuiverRep {
public:
    // maps[k] is dims[target] x dims[source] for arrow k. Entries are reduced
    // into the field; shapes are validated.
    QuiverRep(std::shared_ptr<const Quiver> quiver, Field field, DimVector dims, std::vector<Matrix> maps);

    static QuiverRep zero(std::shared_ptr<const Quiver> quiver, Field field);
    static QuiverRep simple(std::shared_ptr<const Quiver> quiver, Field field, std::size_t vertex);

    const Quiver& quiver() const noexcept { return *quiver_; }
    const std::shared_ptr<const Quiver>& quiver_ptr() const noexcept { return quiver_; }
    const Field& field() const noexcept { return field_; }
    const DimVector& dims() const noexcept { return dims_; }
    const std::vector<Matrix>& maps() const noexcept { return maps_; }
    const Matrix& map(std::size_t arrow) const { return maps_[arrow]; }

    long total_dimension() const { return dims_.total(); }
    bool is_zero() const { return dims_.is_zero(); }

    friend bool operator==(const QuiverRep& a, const QuiverRep& b);

private:
    std::shared_ptr<const Quiver> quiver_;
    Field field_;
    DimVector dims_;
    std::vector<Matrix> maps_;
};

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);

// An arrow-invariant tuple of subspaces; each basis is in reduced row echelon
// form (rows span the subspace), so equality is literal equality of bases.
class Submodule {
public:
    Submodule() = default;
    explicit Submodule(std::vector<Matrix> bases);

    static Submodule zero(const QuiverRep& rep);
    static Submodule whole(const QuiverRep& rep);

    const std::vector<Matrix>& bases() const noexcept { return bases_; }
    const Matrix& basis(std::size_t vertex) const { return bases_[vertex]; }
    const DimVector& dims() const noexcept { return dims_; }

    friend bool operator==(const Submodule& a, const Submodule& b) { return a.bases_ == b.bases_; }

private:
    std::vector<Matrix> bases_;
    DimVector dims_;
};

// Builds a Submodule from arbitrary spanning rows (echelonizes them).
Submodule span_submodule(const QuiverRep& rep, const std::vector<Matrix>& spanning_rows);
bool is_invariant(const QuiverRep& rep, const Submodule& sub);
bool contains(const QuiverRep& rep, const Submodule& outer, const Submodule& inner);

// E / A with the complement basis given by the non-pivot coordinates of A.
QuiverRep quotient(const QuiverRep& rep, const Submodule& sub);
// A as a representation in its own echelon basis.
QuiverRep subrepresentation(const QuiverRep& rep, const Submodule& sub);
// Preimage in E of a submodule of E / A.
Submodule lift_from_quotient(const QuiverRep& rep, const Submodule& sub, const Submodule& of_quotient);
// Image in E of a submodule of A.
Submodule push_from_sub(const QuiverRep& rep, const Submodule& sub, const Submodule& of_sub);

// dim Hom(M, N): vertexwise linear maps commuting with all arrows.
long hom_dim(const QuiverRep& m, const QuiverRep& n);
// Defined through chi = hom - ext1 (valid for hereditary path algebras).
long ext1_dim(const QuiverRep& m, const QuiverRep& n);

}  // namespace stab
