#ifndef DELOOP_ALGEBRA_HPP
#define DELOOP_ALGEBRA_HPP

#include "deloop/linalg.hpp"

#include <memory>
#include <string>
#include <vector>

namespace deloop::algebra {

using linalg::Matrix;
using linalg::u32;
using linalg::u64;

/// Finite-dimensional associative unital F_p-algebra given by structure
/// constants, with a designated complete set of primitive orthogonal
/// idempotents and a designated radical basis. The designated index sets
/// partition the basis: every basis element is either one of the
/// idempotents or a radical element.
struct Algebra {
    u32 p = 101;
    std::size_t dim = 0;
    std::string name;
    std::vector<std::string> basis_labels;
    /// table[(i*dim + j)*dim + k] = coefficient of b_k in b_i * b_j
    std::vector<u32> table;
    std::vector<u32> unit; // coefficients of 1 over the basis
    std::vector<std::size_t> idempotents;
    std::vector<std::size_t> radical;

    u32 coeff(std::size_t i, std::size_t j, std::size_t k) const {
        return table[(i * dim + j) * dim + k];
    }
    u32& coeff_ref(std::size_t i, std::size_t j, std::size_t k) {
        return table[(i * dim + j) * dim + k];
    }

    /// Product of two coefficient vectors.
    std::vector<u32> mul(const std::vector<u32>& x, const std::vector<u32>& y) const;

    /// Right multiplication by b_j acting on row coordinate vectors:
    /// act(j)[i][k] = coeff(i, j, k), so x -> x . act(j) computes x*b_j.
    Matrix right_mult(std::size_t j) const;
    /// Right multiplication by an arbitrary element (coefficient vector).
    Matrix right_mult_elem(const std::vector<u32>& x) const;
    /// Left multiplication by b_i on row vectors: y -> y . left_mult(i) is b_i*y.
    Matrix left_mult(std::size_t i) const;

    bool is_semisimple() const { return radical.empty(); }

    /// Projection A -> A/rad A expressed over the idempotent-class basis,
    /// dim x |idempotents| (valid because idempotents/radical partition).
    Matrix top_projection() const;

    /// Checks every structural invariant (associativity, unit, idempotent
    /// axioms, primitivity, radical nilpotency and ideal property,
    /// semisimple quotient); throws std::runtime_error with a description.
    void validate() const;

    /// FNV-1a over the defining data; stable across runs.
    u64 fingerprint() const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Same multiplication table read with the arguments swapped.
Algebra opposite(const Algebra& a);

/// Semisimple quotient A/rad A on the idempotent-class basis.
Algebra top_quotient(const Algebra& a);

/// Entry (i, j) = dim e_i A e_j, indexed by designated idempotents.
std::vector<std::vector<long>> cartan_matrix(const Algebra& a);

/// True if the two tables define the same algebra entrywise.
bool same_table(const Algebra& a, const Algebra& b);

} // namespace deloop::algebra

#endif
