#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "tatesyz/field.hpp"
#include "tatesyz/matrix.hpp"

namespace tatesyz {

/// Sparse linear combination of basis elements, sorted by index.
template <class F>
using Lin = std::vector<std::pair<int, typename F::Elt>>;

template <class F>
Lin<F> lin_normalize(const F& f, Lin<F> v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Lin<F> out;
    for (auto& [i, c] : v) {
        if (!out.empty() && out.back().first == i)
            out.back().second = f.add(out.back().second, c);
        else
            out.emplace_back(i, c);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [&](const auto& t) { return f.is_zero(t.second); }),
              out.end());
    return out;
}

template <class F>
void lin_axpy(const F& f, Lin<F>& acc, const typename F::Elt& c, const Lin<F>& v) {
    for (const auto& [i, x] : v) acc.emplace_back(i, f.mul(c, x));
}

/// A finite-dimensional algebra given by an ordered basis, structure
/// constants, a complete set of primitive orthogonal idempotents, a
/// basis-aligned radical and a basis-aligned generating set.
///
/// All algebras built here (path algebra quotients, opposites, tensor
/// products, enveloping algebras) have radicals and generators spanned by
/// basis elements, so both are stored as index lists.
template <class F>
struct BasisAlgebra {
    F field;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<Lin<F>> table;     // table[i*dim+j] = b_i * b_j
    std::vector<int> idempotents;  // basis indices
    std::vector<int> radical;      // basis indices spanning rad
    std::vector<int> generators;   // basis indices generating as algebra

    const Lin<F>& prod(int i, int j) const { return table[i * dim + j]; }

    Lin<F> unit() const {
        Lin<F> u;
        for (int e : idempotents) u.emplace_back(e, field.one());
        return lin_normalize(field, std::move(u));
    }

    Lin<F> multiply(const Lin<F>& a, const Lin<F>& b) const {
        Lin<F> acc;
        for (const auto& [i, ci] : a)
            for (const auto& [j, cj] : b) lin_axpy(field, acc, field.mul(ci, cj), prod(i, j));
        return lin_normalize(field, std::move(acc));
    }

    /// Matrix of left multiplication by basis element i on the algebra.
    Matrix<F> left_mult(int i) const {
        Matrix<F> m(field, dim, dim);
        for (int j = 0; j < dim; ++j)
            for (const auto& [k, c] : prod(i, j)) m.at(k, j) = c;
        return m;
    }
};

template <class F>
using AlgebraPtr = std::shared_ptr<const BasisAlgebra<F>>;

/// Same basis, reversed multiplication.
template <class F>
AlgebraPtr<F> opposite(const AlgebraPtr<F>& a) {
    auto op = std::make_shared<BasisAlgebra<F>>(*a);
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < a->dim; ++j) op->table[i * a->dim + j] = a->prod(j, i);
    return op;
}

/// Tensor product over the common ground field; basis pairs are indexed
/// row-major: (i, j) -> i * dim(b) + j.
template <class F>
AlgebraPtr<F> tensor(const AlgebraPtr<F>& a, const AlgebraPtr<F>& b,
                     const std::string& sep = "(x)") {
    if (!(a->field == b->field)) throw std::invalid_argument("tensor: field mismatch");
    const F& f = a->field;
    auto t = std::make_shared<BasisAlgebra<F>>();
    t->field = f;
    t->dim = a->dim * b->dim;
    t->labels.reserve(t->dim);
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < b->dim; ++j) t->labels.push_back(a->labels[i] + sep + b->labels[j]);

    t->table.assign(static_cast<std::size_t>(t->dim) * t->dim, {});
    for (int i1 = 0; i1 < a->dim; ++i1)
        for (int j1 = 0; j1 < b->dim; ++j1)
            for (int i2 = 0; i2 < a->dim; ++i2)
                for (int j2 = 0; j2 < b->dim; ++j2) {
                    const auto& pa = a->prod(i1, i2);
                    if (pa.empty()) continue;
                    const auto& pb = b->prod(j1, j2);
                    if (pb.empty()) continue;
                    Lin<F> acc;
                    for (const auto& [k1, c1] : pa)
                        for (const auto& [k2, c2] : pb)
                            acc.emplace_back(k1 * b->dim + k2, f.mul(c1, c2));
                    t->table[(i1 * b->dim + j1) * static_cast<std::size_t>(t->dim) +
                             (i2 * b->dim + j2)] = lin_normalize(f, std::move(acc));
                }

    for (int e : a->idempotents)
        for (int g : b->idempotents) t->idempotents.push_back(e * b->dim + g);
    std::sort(t->idempotents.begin(), t->idempotents.end());

    std::vector<bool> rad_a(a->dim, false), rad_b(b->dim, false);
    for (int r : a->radical) rad_a[r] = true;
    for (int r : b->radical) rad_b[r] = true;
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < b->dim; ++j)
            if (rad_a[i] || rad_b[j]) t->radical.push_back(i * b->dim + j);

    // idempotent pairs plus g(x)e and e(x)g for the factor generators
    t->generators = t->idempotents;
    std::vector<bool> idem_a(a->dim, false), idem_b(b->dim, false);
    for (int e : a->idempotents) idem_a[e] = true;
    for (int e : b->idempotents) idem_b[e] = true;
    for (int g : a->generators)
        if (!idem_a[g])
            for (int e : b->idempotents) t->generators.push_back(g * b->dim + e);
    for (int g : b->generators)
        if (!idem_b[g])
            for (int e : a->idempotents) t->generators.push_back(e * b->dim + g);
    std::sort(t->generators.begin(), t->generators.end());
    return t;
}

template <class F>
AlgebraPtr<F> enveloping(const AlgebraPtr<F>& a) {
    return tensor(a, opposite(a), "(x)op:");
}

/// Associativity of the structure constants; exhaustive when dim <= cap,
/// sampled otherwise.
template <class F, class Rng>
bool check_associativity(const BasisAlgebra<F>& a, Rng& rng, int cap = 50, int samples = 500) {
    const F& f = a.field;
    auto check = [&](int i, int j, int k) {
        Lin<F> ij = a.prod(i, j);
        Lin<F> jk = a.prod(j, k);
        Lin<F> l, r;
        for (const auto& [m, c] : ij) lin_axpy(f, l, c, a.prod(m, k));
        for (const auto& [m, c] : jk) lin_axpy(f, r, c, a.prod(i, m));
        return lin_normalize(f, std::move(l)) == lin_normalize(f, std::move(r));
    };
    if (a.dim <= cap) {
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j)
                for (int k = 0; k < a.dim; ++k)
                    if (!check(i, j, k)) return false;
        return true;
    }
    for (int s = 0; s < samples; ++s) {
        int i = static_cast<int>(rng() % a.dim);
        int j = static_cast<int>(rng() % a.dim);
        int k = static_cast<int>(rng() % a.dim);
        if (!check(i, j, k)) return false;
    }
    return true;
}

/// e_i e_j = delta_ij e_i and sum e_i acts as the unit on every basis element.
template <class F>
bool check_idempotents(const BasisAlgebra<F>& a) {
    const F& f = a.field;
    for (int e : a.idempotents)
        for (int g : a.idempotents) {
            Lin<F> expect;
            if (e == g) expect.emplace_back(e, f.one());
            if (a.prod(e, g) != expect) return false;
        }
    Lin<F> u = a.unit();
    for (int j = 0; j < a.dim; ++j) {
        Lin<F> id{{j, f.one()}};
        if (a.multiply(u, id) != id || a.multiply(id, u) != id) return false;
    }
    return true;
}

}  // namespace tatesyz
