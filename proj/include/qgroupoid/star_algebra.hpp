#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qgroupoid/linalg.hpp"
#include "qgroupoid/report.hpp"

namespace qgroupoid {

// e_i · e_j = value
struct Product {
    Index i = 0, j = 0;
    SparseVector value;
};

class StarAlgebra {
public:
    StarAlgebra(std::size_t dim, std::vector<std::string> labels, std::vector<Product> products, SparseVector unit,
                std::vector<SparseVector> star_columns);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Index i) const { return labels_[i]; }
    const SparseVector& unit() const { return unit_; }
    const SparseVector& star(Index i) const { return star_[i]; }
    const std::vector<SparseVector>& star_columns() const { return star_; }

    const SparseVector& product(Index i, Index j) const;
    // Nonzero products e_i·e_j, sorted by j.
    const std::vector<std::pair<Index, SparseVector>>& row(Index i) const { return rows_[i]; }
    // Indices i with e_i·e_j ≠ 0, ascending.
    const std::vector<Index>& column(Index j) const { return cols_[j]; }
    std::size_t nonzero_products() const { return nnz_; }

    SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
    SparseVector multiply(const SparseVector& x, Index j) const;
    SparseVector multiply(Index i, const SparseVector& y) const;
    SparseVector star(const SparseVector& x) const;

    // e_i·e_j ≠ 0 implies right_key(i) == left_key(j): blocks of the bipartite
    // graph of nonzero products. Used to skip products known to vanish.
    std::uint32_t left_key(Index j) const { return left_key_[j]; }
    std::uint32_t right_key(Index i) const { return right_key_[i]; }
    std::size_t key_count() const { return key_count_; }
    // True when every product of basis elements is zero or a multiple of a basis element.
    bool monomial() const { return monomial_; }

    std::vector<Product> products() const;

private:
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::pair<Index, SparseVector>>> rows_;
    std::vector<std::vector<Index>> cols_;
    std::vector<std::int32_t> dense_;  // (i, j) -> position in row i, for small dimensions
    std::size_t nnz_ = 0;
    SparseVector unit_;
    std::vector<SparseVector> star_;
    std::vector<std::uint32_t> left_key_, right_key_;
    std::size_t key_count_ = 0;
    bool monomial_ = true;
};

// Basis elements whose products generate the algebra. An identity that holds on
// generators·(all basis) and whose solution set is closed under multiplication
// then holds everywhere; the verifiers use this to avoid cubic loops.
std::vector<Index> generating_basis(const StarAlgebra& a);

Report verify_algebra(const StarAlgebra& a);

StarAlgebra tensor_algebra(const StarAlgebra& a, const StarAlgebra& b);

std::vector<SparseVector> center(const StarAlgebra& a);

struct LinearMap {
    std::size_t source_dim = 0, target_dim = 0;
    std::vector<SparseVector> columns;  // image of each source basis element

    SparseVector apply(const SparseVector& x) const;
    static LinearMap identity(std::size_t n);
};

Report verify_homomorphism(const StarAlgebra& source, const StarAlgebra& target, const LinearMap& f);
Report verify_isomorphism(const StarAlgebra& source, const StarAlgebra& target, const LinearMap& f);

// Γ(e_i) = Σ coef · e_left ⊗ e_right
struct TensorTerm {
    Index left = 0, right = 0;
    Rational coef;
};
using Coproduct = std::vector<std::vector<TensorTerm>>;

// M ⊗ A modulo relators with [m⊗a][m′⊗a′] = [m(a₍₁₎▷m′) ⊗ a₍₂₎a′] and
// [m⊗a]* = [((a*)₍₁₎▷m*) ⊗ (a*)₍₂₎]. Index of m⊗a is m·dim(A) + a.
struct QuotientAlgebra {
    StarAlgebra algebra;
    std::vector<Index> free_columns;  // quotient basis as M⊗A indices
    std::vector<SparseVector> relator_basis;
    std::size_t tensor_dim = 0;
};

using ActionFn = std::function<SparseVector(Index actor, Index module_basis)>;

// Throws IllDefinedOnQuotient when the induced operations do not descend.
QuotientAlgebra quotient_tensor(const StarAlgebra& m, const StarAlgebra& a, const Coproduct& coproduct_a,
                                const ActionFn& action, const std::vector<SparseVector>& relators);

}  // namespace qgroupoid
