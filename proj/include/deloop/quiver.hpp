#ifndef DELOOP_QUIVER_HPP
#define DELOOP_QUIVER_HPP

#include "deloop/algebra.hpp"

#include <string>
#include <vector>

namespace deloop::quiver {

using algebra::Algebra;
using linalg::u32;

struct Arrow {
    std::string name;
    std::size_t src = 0, dst = 0;
};

/// One summand of a relation: coeff * (arrows composed in traversal order,
/// path[0] first).
struct RelTerm {
    u32 coeff = 1;
    std::vector<std::size_t> path;
};

using Relation = std::vector<RelTerm>;

/// Bound quiver presentation. Relations are F_p-linear combinations of
/// parallel paths of length >= 2; the ideal is handled by linear
/// elimination degree by degree up to the truncation bound L, and
/// admissibility at degree L is validated, not assumed.
struct QuiverPresentation {
    u32 p = 101;
    std::size_t truncation = 2; // L
    std::string name;
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;

    std::size_t vertex_index(const std::string& label) const; // throws if unknown
    std::size_t arrow_index(const std::string& name) const;   // throws if unknown
};

struct NonAdmissibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Path algebra modulo the relation ideal. Basis = path monomials of
/// length < L that survive elimination, ordered by length, then by
/// vertex/arrow order, then lexicographically; trivial paths become the
/// designated idempotents and all longer basis paths the radical basis.
/// Throws NonAdmissibleError if some length-L path survives modulo the
/// relation span (L too small or ideal not admissible).
Algebra from_quiver(const QuiverPresentation& qp);

} // namespace deloop::quiver

#endif
