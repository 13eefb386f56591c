#pragma once

#include <stdexcept>
#include <vector>

#include "tatesyz/cohomology.hpp"
#include "tatesyz/resolution.hpp"

namespace tatesyz {

/// Literally periodic minimal bimodule resolution of a periodic algebra
/// (certificate with n = 0, period p): terms P_0..P_{p-1} repeat, and the
/// wrap differential d_p routes P_0 through the witness isomorphism
/// Omega^p ~= Omega^0.
template <class F>
struct PeriodicBimoduleResolution {
    int p = 1;
    std::vector<FdModule<F>> terms;     // P_0 .. P_{p-1}
    std::vector<ProjectiveInfo> info;
    std::vector<Matrix<F>> d;           // d[l] : P_l -> P_{l-1} for l = 1..p (d[0] unused)

    const FdModule<F>& term(int l) const { return terms[l % p]; }
    const Matrix<F>& diff(int l) const {  // l >= 1, periodic
        return d[(l - 1) % p + 1];
    }
};

template <class F>
PeriodicBimoduleResolution<F> periodic_bimodule_resolution(const Resolution<F>& r,
                                                           const PeriodicityCertificate<F>& cert) {
    if (cert.n != 0) throw std::invalid_argument("periodic resolution requires n = 0");
    if (r.built() < cert.p) throw std::invalid_argument("resolution shorter than the period");
    PeriodicBimoduleResolution<F> out;
    out.p = cert.p;
    for (int l = 0; l < cert.p; ++l) {
        out.terms.push_back(r.terms[l]);
        out.info.push_back(r.info[l]);
    }
    auto winv = cert.witness.inverse();
    if (!winv) throw std::invalid_argument("periodic resolution: witness not invertible");
    out.d.resize(cert.p + 1);
    for (int l = 1; l < cert.p; ++l) out.d[l] = r.diff[l];
    // wrap: P_0 ->> Omega^0 -> Omega^p -> P_{p-1}
    out.d[cert.p] = r.incl[cert.p - 1] * (*winv * r.epi[0]);
    return out;
}

/// Tensor of a Lambda-bimodule and a Gamma-bimodule as a bimodule over
/// A = Lambda (x) Gamma; coordinates pair row-major, matching the basis
/// pairing of tensor()/enveloping().
template <class F>
FdModule<F> tensor_bimodules(const FdModule<F>& ma, int dim_a, const FdModule<F>& mb, int dim_b,
                             const AlgebraPtr<F>& env_ab) {
    const int dim_ab = dim_a * dim_b;
    if (env_ab->dim != dim_ab * dim_ab)
        throw std::invalid_argument("tensor_bimodules: enveloping algebra mismatch");
    FdModule<F> m;
    m.alg = env_ab;
    m.dim = ma.dim * mb.dim;
    m.action.reserve(env_ab->dim);
    for (int u = 0; u < dim_ab; ++u)
        for (int v = 0; v < dim_ab; ++v) {
            int l1 = u / dim_b, g1 = u % dim_b;
            int l2 = v / dim_b, g2 = v % dim_b;
            m.action.push_back(
                ma.action[l1 * dim_a + l2].kron(mb.action[g1 * dim_b + g2]));
        }
    return m;
}

template <class F>
FdModule<F> direct_sum(const AlgebraPtr<F>& alg, const std::vector<const FdModule<F>*>& parts) {
    const F& f = alg->field;
    FdModule<F> m;
    m.alg = alg;
    m.dim = 0;
    for (auto* p : parts) m.dim += p->dim;
    for (int x = 0; x < alg->dim; ++x) {
        Matrix<F> act(f, m.dim, m.dim);
        int off = 0;
        for (auto* p : parts) {
            const Matrix<F>& a = p->action[x];
            for (int i = 0; i < p->dim; ++i)
                for (int j = 0; j < p->dim; ++j) act.at(off + i, off + j) = a.at(i, j);
            off += p->dim;
        }
        m.action.push_back(std::move(act));
    }
    return m;
}

/// Prop 4.3 verification report for A = Lambda (x) Gamma, with Lambda
/// periodic of period p (as a bimodule, n = 0) and Gamma of finite bimodule
/// projective dimension n.
struct TensorCheckReport {
    bool hypotheses_ok = false;
    std::string hypothesis_failure;
    int p = 0;            // period of the first factor
    int n = 0;            // bimodule projective dimension of the second factor
    int length = 0;       // degrees checked: 0..length
    bool dd_zero = false;
    bool minimal = false;
    bool exact = false;
    bool dims_ok = false;  // dim R_r = sum_i dim P_{r-i} dim Q_i
    bool parity_even = false;
    bool even_branch_ok = false;  // d_{n+p+1} == d_{n+1} literally
    bool odd_branch_ok = false;   // D-matrix commuting square

    bool passed() const {
        return hypotheses_ok && dd_zero && minimal && exact && dims_ok &&
               (parity_even ? even_branch_ok : odd_branch_ok);
    }
};

/// Builds the total complex of P (x) Q with the signed block differential
///   (d^P_{r-j} (x) id) on block (j, j),  ((-1)^{r-j} id (x) d^Q_j) on (j, j-1),
/// verifies it is a minimal resolution of A, and checks the parity-dependent
/// periodicity gluing at degree n + 1.
template <class F>
TensorCheckReport tensor_resolution_check(const AlgebraPtr<F>& a, const AlgebraPtr<F>& b,
                                          int length, int n_max, int p_max,
                                          std::uint64_t seed) {
    TensorCheckReport rep;

    auto env_a = enveloping(a);
    auto bim_a = regular_bimodule(a, env_a);
    auto res_a = minimal_resolution(bim_a, 1);
    auto det_a = detect_eventual_periodicity(res_a, 0, p_max, seed);
    if (!det_a.cert || det_a.cert->n != 0 || res_a.syz[0].dim == 0 ||
        res_a.finite_pd().has_value()) {
        rep.hypothesis_failure = "first factor is not a periodic algebra within bounds";
        return rep;
    }
    auto env_b = enveloping(b);
    auto bim_b = regular_bimodule(b, env_b);
    auto res_b = minimal_resolution(bim_b, n_max + 2);
    auto pd_b = res_b.finite_pd();
    if (!pd_b) {
        rep.hypothesis_failure =
            "second factor does not have finite bimodule projective dimension within bounds";
        return rep;
    }
    rep.hypotheses_ok = true;
    rep.p = det_a.cert->p;
    rep.n = *pd_b;
    const int p = rep.p, n = rep.n;
    rep.parity_even = (p % 2 == 0);
    const int L = std::max(length, n + p + 1);
    rep.length = L;

    extend_resolution(res_a, p);
    auto per = periodic_bimodule_resolution(res_a, *det_a.cert);

    auto ab = tensor(a, b);
    auto env_ab = enveloping(ab);
    const F& f = a->field;

    // tensor summand modules S[l][j] = P_l (x) Q_j over env_ab
    std::vector<std::vector<FdModule<F>>> summand(p);
    for (int l = 0; l < p; ++l)
        for (int j = 0; j <= n; ++j)
            summand[l].push_back(
                tensor_bimodules(per.terms[l], a->dim, res_b.terms[j], b->dim, env_ab));
    auto p_index = [&](int l) { return ((l % p) + p) % p; };

    // total-complex terms R_0..R_L and differentials D_1..D_L
    std::vector<FdModule<F>> total;
    std::vector<std::vector<int>> offs(L + 1);  // block offsets per degree
    for (int r = 0; r <= L; ++r) {
        std::vector<const FdModule<F>*> parts;
        int off = 0;
        for (int j = 0; j <= std::min(r, n); ++j) {
            offs[r].push_back(off);
            const FdModule<F>& s = summand[p_index(r - j)][j];
            off += s.dim;
            parts.push_back(&s);
        }
        total.push_back(direct_sum(env_ab, parts));
    }

    std::vector<Matrix<F>> D(L + 1);
    for (int r = 1; r <= L; ++r) {
        Matrix<F> d(f, total[r - 1].dim, total[r].dim);
        for (int j = 0; j <= std::min(r, n); ++j) {
            int coff = offs[r][j];
            if (r - j >= 1) {
                // block (j, j): d^P_{r-j} (x) id_{Q_j}
                Matrix<F> blk = per.diff(r - j).kron(
                    Matrix<F>::identity(f, res_b.terms[j].dim));
                int roff = offs[r - 1][j];
                for (std::size_t i = 0; i < blk.rows(); ++i)
                    for (std::size_t k = 0; k < blk.cols(); ++k)
                        d.at(roff + i, coff + k) = blk.at(i, k);
            }
            if (j >= 1) {
                // block (j-1, j): (-1)^{r-j} id_{P_{r-j}} (x) d^Q_j
                Matrix<F> blk =
                    Matrix<F>::identity(f, per.term(r - j).dim).kron(res_b.diff[j]);
                if ((r - j) % 2 != 0) blk = blk.neg();
                int roff = offs[r - 1][j - 1];
                for (std::size_t i = 0; i < blk.rows(); ++i)
                    for (std::size_t k = 0; k < blk.cols(); ++k)
                        d.at(roff + i, coff + k) = blk.at(i, k);
            }
        }
        D[r] = std::move(d);
    }

    rep.dd_zero = true;
    for (int r = 2; r <= L; ++r)
        if (!(D[r - 1] * D[r]).is_zero()) rep.dd_zero = false;

    rep.minimal = true;
    for (int r = 1; r <= L; ++r) {
        Matrix<F> rad = radical_span(total[r - 1]);
        std::size_t rr = rad.rank();
        if (Matrix<F>::hstack(rad, D[r]).rank() != rr) rep.minimal = false;
    }

    // exactness: at degree 0 the cokernel of D_1 is A; above, rank counts
    auto bim_ab = regular_bimodule(ab, env_ab);
    rep.exact = true;
    if (static_cast<int>(total[0].dim - D[1].rank()) != bim_ab.dim) rep.exact = false;
    for (int r = 1; r < L; ++r)
        if (total[r].dim - D[r].rank() != D[r + 1].rank()) rep.exact = false;

    rep.dims_ok = true;
    for (int r = 0; r <= L; ++r) {
        int expect = 0;
        for (int j = 0; j <= std::min(r, n); ++j)
            expect += per.term(r - j).dim * res_b.terms[j].dim;
        if (expect != total[r].dim) rep.dims_ok = false;
    }

    // parity branch at degree n+1 vs n+p+1 (identical block shapes: j <= n)
    if (rep.parity_even) {
        rep.even_branch_ok = (D[n + p + 1] == D[n + 1]);
    } else {
        // diagonal sign matrices V_r = blockdiag_j((-1)^{n+j+1} I) satisfy
        // D_{n+1} V_top = V_bot D_{n+p+1}
        auto sign_matrix = [&](int r) {
            Matrix<F> v(f, total[r].dim, total[r].dim);
            for (int j = 0; j <= std::min(r, n); ++j) {
                const FdModule<F>& s = summand[p_index(r - j)][j];
                typename F::Elt c = ((n + j + 1) % 2 == 0) ? f.one() : f.neg(f.one());
                for (int i = 0; i < s.dim; ++i) v.at(offs[r][j] + i, offs[r][j] + i) = c;
            }
            return v;
        };
        // R_{n+p+1} and R_{n+1} (resp. n+p and n) have literally equal terms
        rep.odd_branch_ok =
            (D[n + 1] * sign_matrix(n + p + 1) == sign_matrix(n + p) * D[n + p + 1]);
    }
    return rep;
}

}  // namespace tatesyz
