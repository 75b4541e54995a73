#include "deloop/algebra.hpp"

#include <algorithm>
#include <set>

namespace deloop::algebra {

using linalg::add_mod;
using linalg::mul_mod;

std::vector<u32> Algebra::mul(const std::vector<u32>& x, const std::vector<u32>& y) const {
    std::vector<u32> out(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j] == 0) continue;
            u32 c = mul_mod(x[i], y[j], p);
            for (std::size_t k = 0; k < dim; ++k) {
                u32 t = coeff(i, j, k);
                if (t) out[k] = add_mod(out[k], mul_mod(c, t, p), p);
            }
        }
    }
    return out;
}

Matrix Algebra::right_mult(std::size_t j) const {
    Matrix m(dim, dim, p);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k) m(i, k) = coeff(i, j, k);
    return m;
}

Matrix Algebra::right_mult_elem(const std::vector<u32>& x) const {
    Matrix m(dim, dim, p);
    for (std::size_t j = 0; j < dim; ++j) {
        if (x[j] == 0) continue;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t k = 0; k < dim; ++k) {
                u32 t = coeff(i, j, k);
                if (t) m(i, k) = add_mod(m(i, k), mul_mod(x[j], t, p), p);
            }
    }
    return m;
}

Matrix Algebra::left_mult(std::size_t i) const {
    Matrix m(dim, dim, p);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) m(j, k) = coeff(i, j, k);
    return m;
}

Matrix Algebra::top_projection() const {
    Matrix m(dim, idempotents.size(), p);
    for (std::size_t v = 0; v < idempotents.size(); ++v) m(idempotents[v], v) = 1;
    return m;
}

namespace {

std::vector<u32> basis_vec(std::size_t i, std::size_t dim) {
    std::vector<u32> v(dim, 0);
    v[i] = 1;
    return v;
}

} // namespace

void Algebra::validate() const {
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("algebra '" + name + "': " + msg);
    };
    if (!linalg::is_prime(p)) fail("modulus is not prime");
    if (dim == 0) fail("zero-dimensional algebra");
    if (table.size() != dim * dim * dim) fail("table size mismatch");
    if (unit.size() != dim) fail("unit size mismatch");

    // idempotents + radical partition the basis
    std::vector<int> role(dim, 0);
    for (std::size_t i : idempotents) {
        if (i >= dim || role[i]) fail("bad idempotent index set");
        role[i] = 1;
    }
    for (std::size_t i : radical) {
        if (i >= dim || role[i]) fail("radical overlaps idempotents");
        role[i] = 2;
    }
    for (std::size_t i = 0; i < dim; ++i)
        if (!role[i]) fail("basis element neither idempotent nor radical");

    // unit acts as identity
    for (std::size_t i = 0; i < dim; ++i) {
        if (mul(unit, basis_vec(i, dim)) != basis_vec(i, dim)) fail("unit fails on the left");
        if (mul(basis_vec(i, dim), unit) != basis_vec(i, dim)) fail("unit fails on the right");
    }

    // associativity via right-multiplication operators:
    // act(b_j) act(b_k) must equal sum_l coeff(j,k,l) act(b_l)
    std::vector<Matrix> rm(dim);
    for (std::size_t j = 0; j < dim; ++j) rm[j] = right_mult(j);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) {
            Matrix lhs = rm[j] * rm[k];
            Matrix rhs(dim, dim, p);
            for (std::size_t l = 0; l < dim; ++l) {
                u32 c = coeff(j, k, l);
                if (c) rhs = rhs + rm[l].scaled(c);
            }
            if (!(lhs == rhs)) fail("associativity fails at basis pair");
        }

    // orthogonal idempotents summing to the unit
    std::vector<u32> s(dim, 0);
    for (std::size_t a : idempotents) {
        for (std::size_t b : idempotents) {
            auto prod = mul(basis_vec(a, dim), basis_vec(b, dim));
            auto want = (a == b) ? basis_vec(a, dim) : std::vector<u32>(dim, 0);
            if (prod != want) fail("idempotents not orthogonal idempotent");
        }
        s[a] = add_mod(s[a], 1, p);
    }
    if (s != unit) fail("idempotents do not sum to the unit");

    // radical spans a nilpotent two-sided ideal
    Matrix rad_rows(radical.size(), dim, p);
    for (std::size_t t = 0; t < radical.size(); ++t) rad_rows(t, radical[t]) = 1;
    if (!radical.empty()) {
        Matrix cur = rad_rows;
        std::size_t steps = 0;
        while (cur.rows() > 0) {
            if (++steps > dim + 1) fail("radical is not nilpotent");
            Matrix next(0, dim, p);
            for (std::size_t r = 0; r < cur.rows(); ++r)
                for (std::size_t j : radical)
                    next = next.vstack(cur.row(r) * rm[j]);
            cur = linalg::row_space_basis(next);
            if (cur.rows() == rad_rows.rows()) fail("radical power chain does not shrink");
        }
        // two-sided ideal: b*r and r*b stay in the span for all basis b
        for (std::size_t r : radical)
            for (std::size_t b = 0; b < dim; ++b) {
                Matrix left(1, dim, p), right(1, dim, p);
                auto lv = mul(basis_vec(b, dim), basis_vec(r, dim));
                auto rv = mul(basis_vec(r, dim), basis_vec(b, dim));
                for (std::size_t k = 0; k < dim; ++k) { left(0, k) = lv[k]; right(0, k) = rv[k]; }
                if (!linalg::rows_contained(left, rad_rows) ||
                    !linalg::rows_contained(right, rad_rows))
                    fail("radical span is not a two-sided ideal");
            }
    }

    // semisimple quotient: e_i e_j = delta e_i mod rad (holds exactly here),
    // and each e A e has one-dimensional top (primitivity, split case)
    for (std::size_t v : idempotents) {
        Matrix span(0, dim, p);
        for (std::size_t b = 0; b < dim; ++b) {
            auto w = mul(mul(basis_vec(v, dim), basis_vec(b, dim)), basis_vec(v, dim));
            Matrix row(1, dim, p);
            for (std::size_t k = 0; k < dim; ++k) row(0, k) = w[k];
            span = span.vstack(row);
        }
        // quotient by rad: project away radical coordinates
        Matrix proj = span.submatrix_cols(idempotents);
        if (linalg::rank(proj) != 1) fail("designated idempotent is not primitive (split)");
    }
}

u64 Algebra::fingerprint() const {
    u64 h = 1469598103934665603ull;
    auto mix = [&h](u64 v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(p);
    mix(dim);
    for (u32 v : table) mix(v);
    for (u32 v : unit) mix(v);
    for (auto v : idempotents) mix(v);
    for (auto v : radical) mix(v);
    return h;
}

Algebra opposite(const Algebra& a) {
    Algebra o = a;
    o.name = a.name.empty() ? "op" : a.name + "^op";
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                o.coeff_ref(i, j, k) = a.coeff(j, i, k);
    return o;
}

Algebra top_quotient(const Algebra& a) {
    Algebra t;
    t.p = a.p;
    t.dim = a.idempotents.size();
    t.name = a.name.empty() ? "top" : "top(" + a.name + ")";
    t.table.assign(t.dim * t.dim * t.dim, 0);
    t.unit.assign(t.dim, 1 % a.p);
    for (std::size_t v = 0; v < t.dim; ++v) {
        t.basis_labels.push_back(a.basis_labels.empty() ? "e" + std::to_string(v)
                                                        : a.basis_labels[a.idempotents[v]]);
        t.idempotents.push_back(v);
        t.coeff_ref(v, v, v) = 1;
    }
    return t;
}

std::vector<std::vector<long>> cartan_matrix(const Algebra& a) {
    std::size_t n = a.idempotents.size();
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix span(0, a.dim, a.p);
            for (std::size_t b = 0; b < a.dim; ++b) {
                std::vector<u32> e_i(a.dim, 0), e_j(a.dim, 0), bb(a.dim, 0);
                e_i[a.idempotents[i]] = 1;
                e_j[a.idempotents[j]] = 1;
                bb[b] = 1;
                auto w = a.mul(a.mul(e_i, bb), e_j);
                Matrix row(1, a.dim, a.p);
                for (std::size_t k = 0; k < a.dim; ++k) row(0, k) = w[k];
                span = span.vstack(row);
            }
            c[i][j] = static_cast<long>(linalg::rank(span));
        }
    return c;
}

bool same_table(const Algebra& a, const Algebra& b) {
    return a.p == b.p && a.dim == b.dim && a.table == b.table && a.unit == b.unit;
}

} // namespace deloop::algebra
