#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "tatesyz/fd_module.hpp"

namespace tatesyz {

/// Minimal projective resolution data up to some length:
///   ... -> P_1 -d1-> P_0 -epi0-> M -> 0
/// with syz[i] = Omega^i (syz[0] = M), epi[i] : P_i ->> syz[i],
/// incl[i] : syz[i+1] -> P_i the kernel inclusion, and
/// diff[i] = incl[i-1] * epi[i] for i >= 1.
template <class F>
struct Resolution {
    std::vector<FdModule<F>> syz;
    std::vector<FdModule<F>> terms;
    std::vector<ProjectiveInfo> info;
    std::vector<Matrix<F>> epi;
    std::vector<Matrix<F>> incl;
    std::vector<Matrix<F>> diff;  // diff[0] unused placeholder

    int built() const { return static_cast<int>(terms.size()); }

    /// Projective dimension if it became visible (some syzygy vanished).
    std::optional<int> finite_pd() const {
        for (std::size_t i = 0; i < syz.size(); ++i)
            if (syz[i].dim == 0) return static_cast<int>(i) - 1;
        return std::nullopt;
    }
};

/// Extends a resolution so that terms P_0 .. P_{length-1} exist (or the
/// resolution terminates earlier).
template <class F>
void extend_resolution(Resolution<F>& r, int length) {
    while (r.built() < length) {
        const FdModule<F>& cur = r.syz.back();
        if (cur.dim == 0) return;  // finished
        auto cover = projective_cover(cur);
        auto [ker, ker_incl] = cover_kernel(cover.proj, cover.epi);
        if (!r.terms.empty()) r.diff.push_back(r.incl.back() * cover.epi);
        r.terms.push_back(std::move(cover.proj));
        r.info.push_back(std::move(cover.info));
        r.epi.push_back(std::move(cover.epi));
        r.incl.push_back(std::move(ker_incl));
        r.syz.push_back(std::move(ker));
        if (r.diff.size() < r.terms.size()) r.diff.resize(r.terms.size(), Matrix<F>());
    }
}

template <class F>
Resolution<F> minimal_resolution(const FdModule<F>& m, int length) {
    Resolution<F> r;
    r.syz.push_back(m);
    extend_resolution(r, length);
    return r;
}

namespace detail {

/// d * d == 0 and exactness (rank d_{i+1} == dim P_i - rank d_i) across the
/// built window, ignoring the augmentation end.
template <class F>
bool check_resolution_exactness(const Resolution<F>& r) {
    for (std::size_t i = 2; i < r.diff.size(); ++i)
        if (!(r.diff[i - 1] * r.diff[i]).is_zero()) return false;
    // exactness: ker d_i = im d_{i+1} by rank count
    for (std::size_t i = 1; i + 1 < r.diff.size(); ++i) {
        std::size_t dim = r.terms[i].dim;
        if (dim - r.diff[i].rank() != r.diff[i + 1].rank()) return false;
    }
    return true;
}

}  // namespace detail

template <class F>
struct PeriodicityOutcome {
    std::optional<PeriodicityCertificate<F>> cert;
    std::vector<int> syzygy_dims;  // dims of Omega^0 .. Omega^{window}
};

/// Searches for the least n <= n_max, then least p <= p_max, with
/// Omega^{n+p}(M) iso Omega^n(M). The dimension sequence acts as a
/// prefilter; positives carry a verified invertible witness. Finite
/// projective dimension yields a certificate at the first vanishing
/// syzygy with period 1.
template <class F>
PeriodicityOutcome<F> detect_eventual_periodicity(Resolution<F>& r, int n_max, int p_max,
                                                  std::uint64_t seed) {
    const int window = n_max + 2 * p_max + 1;
    extend_resolution(r, window);

    PeriodicityOutcome<F> out;
    for (const auto& s : r.syz) out.syzygy_dims.push_back(s.dim);

    if (auto pd = r.finite_pd()) {
        PeriodicityCertificate<F> cert;
        cert.n = *pd + 1;
        cert.p = 1;
        cert.seed = seed;
        out.cert = cert;  // Omega^{pd+1} = 0 = Omega^{pd+2}, empty witness
        return out;
    }

    const auto& dims = out.syzygy_dims;
    const F& f = r.syz[0].field();
    std::mt19937_64 rng(seed);
    int trials = default_iso_trials(f.size_hint());
    for (int n = 0; n <= n_max; ++n) {
        for (int p = 1; p <= p_max; ++p) {
            bool dims_ok = true;
            for (int k = 0; n + k + p < static_cast<int>(dims.size()); ++k)
                if (dims[n + k] != dims[n + k + p]) {
                    dims_ok = false;
                    break;
                }
            if (!dims_ok) continue;
            auto iso = iso_test(r.syz[n + p], r.syz[n], trials, rng);
            if (iso.verdict == IsoVerdict::Isomorphic) {
                PeriodicityCertificate<F> cert;
                cert.n = n;
                cert.p = p;
                cert.witness = std::move(iso.witness);
                cert.seed = seed;
                out.cert = cert;
                return out;
            }
        }
    }
    return out;
}

/// Periodic complete resolution spliced from a minimal resolution and a
/// periodicity certificate Omega^{n+p} ~= Omega^n:
///   T_j = P_j for j >= n, and below n the window P_n .. P_{n+p-1} repeats,
///   with the syzygy isomorphism glued in wherever the repeat wraps.
/// Indices run over a finite window [lo, hi].
template <class F>
struct CompleteResolution {
    int lo = 0, hi = 0;
    int splice_n = 0, period = 1;
    std::vector<FdModule<F>> terms;      // terms[j - lo] = T_j
    std::vector<ProjectiveInfo> info;
    std::vector<Matrix<F>> diff;         // diff[j - lo] : T_j -> T_{j-1}, absent at j == lo
    std::vector<Matrix<F>> theta;        // theta[j - lo] : T_j -> P_j for j >= 0 (else empty)

    const FdModule<F>& term(int j) const { return terms[j - lo]; }
    const ProjectiveInfo& term_info(int j) const { return info[j - lo]; }
    const Matrix<F>& differential(int j) const { return diff[j - lo]; }
};

namespace detail {

/// Least solution basis: finds some theta in span(homs) with theta * rhs_of
/// == target, where rhs_of is a fixed matrix.
template <class F>
std::optional<Matrix<F>> solve_in_hom_span(const std::vector<Matrix<F>>& homs,
                                           const Matrix<F>& right, const Matrix<F>& target) {
    const F& f = target.field();
    std::size_t rows = target.rows() * target.cols();
    Matrix<F> sys(f, rows, homs.size());
    for (std::size_t k = 0; k < homs.size(); ++k) {
        Matrix<F> hk = homs[k] * right;
        for (std::size_t i = 0; i < hk.rows(); ++i)
            for (std::size_t j = 0; j < hk.cols(); ++j) sys.at(i * hk.cols() + j, k) = hk.at(i, j);
    }
    std::vector<typename F::Elt> b(rows, f.zero());
    for (std::size_t i = 0; i < target.rows(); ++i)
        for (std::size_t j = 0; j < target.cols(); ++j) b[i * target.cols() + j] = target.at(i, j);
    auto sol = sys.solve(b);
    if (!sol) return std::nullopt;
    Matrix<F> theta(f, homs.empty() ? target.rows() : homs[0].rows(),
                    homs.empty() ? right.rows() : homs[0].cols());
    for (std::size_t k = 0; k < homs.size(); ++k)
        if (!f.is_zero((*sol)[k])) theta = theta.add(homs[k].scale((*sol)[k]));
    return theta;
}

}  // namespace detail

/// Builds T over [lo, hi] from a resolution built through degree
/// n + p (terms P_0 .. P_{n+p-1} and syzygies through Omega^{n+p}).
template <class F>
CompleteResolution<F> splice_complete_resolution(const Resolution<F>& r,
                                                 const PeriodicityCertificate<F>& cert, int lo,
                                                 int hi) {
    const int n = cert.n, p = cert.p;
    if (p < 1) throw std::invalid_argument("splice: period must be positive");
    if (hi < n + p || r.built() < hi + 1)
        throw std::invalid_argument("splice: resolution window too short");
    if (r.syz[n].dim == 0) throw std::invalid_argument("splice: cannot splice a zero syzygy");

    auto winv = cert.witness.inverse();
    if (!winv) throw std::invalid_argument("splice: witness is not invertible");
    // glue g : P_n -> P_{n+p-1}, through Omega^n ~= Omega^{n+p}
    Matrix<F> glue = r.incl[n + p - 1] * (*winv * r.epi[n]);

    auto model_index = [&](int j) -> int {
        if (j >= n) return j;
        int k = n - j;                       // k >= 1
        return n + p - 1 - ((k - 1) % p);
    };

    CompleteResolution<F> t;
    t.lo = lo;
    t.hi = hi;
    t.splice_n = n;
    t.period = p;
    for (int j = lo; j <= hi; ++j) {
        int m = model_index(j);
        t.terms.push_back(r.terms[m]);
        t.info.push_back(r.info[m]);
    }
    t.diff.resize(hi - lo + 1);
    for (int j = lo + 1; j <= hi; ++j) {
        int m = model_index(j);
        if (j > n)
            t.diff[j - lo] = r.diff[j];
        else if (m == n)
            t.diff[j - lo] = glue;  // the wrap step, including j == n itself
        else
            t.diff[j - lo] = r.diff[m];
    }

    // comparison map theta : T -> P over the identity of M, for j >= 0
    t.theta.resize(hi - lo + 1);
    for (int j = std::min(hi, r.built() - 1); j >= std::max(lo, 0); --j) {
        if (j >= n) {
            t.theta[j - lo] = Matrix<F>::identity(r.syz[0].field(), t.term(j).dim);
            continue;
        }
        // d_{j+1} * theta_{j+1} = theta_j * del_{j+1}
        Matrix<F> target = r.diff[j + 1] * t.theta[j + 1 - lo];
        auto homs = hom_space(t.term(j), r.terms[j]);
        auto theta = detail::solve_in_hom_span(homs, t.diff[j + 1 - lo], target);
        if (!theta) throw std::logic_error("splice: comparison map does not lift");
        t.theta[j - lo] = std::move(*theta);
    }
    return t;
}

/// diff * diff == 0 and rank-exactness across the interior of the window.
template <class F>
bool verify_total_acyclicity(const CompleteResolution<F>& t) {
    for (int j = t.lo + 2; j <= t.hi; ++j)
        if (!(t.differential(j - 1) * t.differential(j)).is_zero()) return false;
    for (int j = t.lo + 1; j < t.hi; ++j) {
        std::size_t dim = t.term(j).dim;
        if (dim - t.differential(j).rank() != t.differential(j + 1).rank()) return false;
    }
    return true;
}

}  // namespace tatesyz
