#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "tatesyz/basis_algebra.hpp"
#include "tatesyz/matrix.hpp"

namespace tatesyz {

/// A finitely generated left module given by the action matrix of every
/// algebra basis element on a coordinate space.
template <class F>
struct FdModule {
    AlgebraPtr<F> alg;
    int dim = 0;
    std::vector<Matrix<F>> action;  // one square matrix per algebra basis element

    const F& field() const { return alg->field; }
};

template <class F>
FdModule<F> zero_module(const AlgebraPtr<F>& a) {
    FdModule<F> m;
    m.alg = a;
    m.dim = 0;
    m.action.assign(a->dim, Matrix<F>(a->field, 0, 0));
    return m;
}

/// The left regular module.
template <class F>
FdModule<F> regular_module(const AlgebraPtr<F>& a) {
    FdModule<F> m;
    m.alg = a;
    m.dim = a->dim;
    m.action.reserve(a->dim);
    for (int i = 0; i < a->dim; ++i) m.action.push_back(a->left_mult(i));
    return m;
}

/// The algebra as a bimodule, i.e. as a left module over its enveloping
/// algebra env = a (x) a^op: the pair (x, y) acts on m by x*m*y.
template <class F>
FdModule<F> regular_bimodule(const AlgebraPtr<F>& a, const AlgebraPtr<F>& env) {
    const F& f = a->field;
    if (env->dim != a->dim * a->dim) throw std::invalid_argument("regular_bimodule: bad enveloping algebra");
    FdModule<F> m;
    m.alg = env;
    m.dim = a->dim;
    m.action.reserve(env->dim);
    for (int x = 0; x < a->dim; ++x)
        for (int y = 0; y < a->dim; ++y) {
            Matrix<F> act(f, a->dim, a->dim);
            for (int b = 0; b < a->dim; ++b) {
                // x * b * y
                for (const auto& [k, c1] : a->prod(x, b))
                    for (const auto& [l, c2] : a->prod(k, y))
                        act.at(l, b) = f.add(act.at(l, b), f.mul(c1, c2));
            }
            m.action.push_back(std::move(act));
        }
    return m;
}

/// Simple module at a primitive idempotent: e acts as 1, the rest of the
/// basis acts as 0.
template <class F>
FdModule<F> simple_module(const AlgebraPtr<F>& a, int idem_index) {
    if (idem_index < 0 || idem_index >= static_cast<int>(a->idempotents.size()))
        throw std::out_of_range("simple_module: bad idempotent index");
    const F& f = a->field;
    FdModule<F> m;
    m.alg = a;
    m.dim = 1;
    for (int x = 0; x < a->dim; ++x) {
        Matrix<F> act(f, 1, 1);
        if (x == a->idempotents[idem_index]) act.at(0, 0) = f.one();
        m.action.push_back(std::move(act));
    }
    return m;
}

/// Bookkeeping for a direct sum of cyclic projectives A*e. Coordinates of
/// the total space are tagged with their summand and the algebra basis
/// element they carry.
struct ProjectiveInfo {
    std::vector<int> summand_idem;   // idempotent basis index per summand
    std::vector<int> summand_offset; // first coordinate of each summand
    std::vector<int> gen_pos;        // coordinate carrying e itself, per summand
    std::vector<int> coord_summand;  // per coordinate
    std::vector<int> coord_elt;      // per coordinate: algebra basis element
    int summands() const { return static_cast<int>(summand_idem.size()); }
};

/// Basis elements b with b*e = b, i.e. the basis of A*e.
template <class F>
std::vector<int> cyclic_basis(const BasisAlgebra<F>& a, int idem) {
    std::vector<int> out;
    for (int b = 0; b < a.dim; ++b) {
        const auto& p = a.prod(b, idem);
        if (p.size() == 1 && p[0].first == b && a.field.eq(p[0].second, a.field.one()))
            out.push_back(b);
    }
    return out;
}

/// Direct sum of projectives A*e_i for the given idempotent indices.
template <class F>
std::pair<FdModule<F>, ProjectiveInfo> projective_sum(const AlgebraPtr<F>& a,
                                                      const std::vector<int>& idems) {
    const F& f = a->field;
    ProjectiveInfo info;
    std::vector<std::vector<int>> bases;
    int total = 0;
    for (int s = 0; s < static_cast<int>(idems.size()); ++s) {
        int e = idems[s];
        auto basis = cyclic_basis(*a, e);
        info.summand_idem.push_back(e);
        info.summand_offset.push_back(total);
        int gp = -1;
        for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
            info.coord_summand.push_back(s);
            info.coord_elt.push_back(basis[i]);
            if (basis[i] == e) gp = total + i;
        }
        if (gp < 0) throw std::logic_error("projective: idempotent not in its own cyclic basis");
        info.gen_pos.push_back(gp);
        total += static_cast<int>(basis.size());
        bases.push_back(std::move(basis));
    }

    FdModule<F> m;
    m.alg = a;
    m.dim = total;
    m.action.reserve(a->dim);
    for (int x = 0; x < a->dim; ++x) {
        Matrix<F> act(f, total, total);
        for (int s = 0; s < static_cast<int>(idems.size()); ++s) {
            const auto& basis = bases[s];
            int off = info.summand_offset[s];
            // position of each algebra basis element within the summand
            for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
                for (const auto& [k, c] : a->prod(x, basis[col])) {
                    // k lies in A*e again; find its position
                    int pos = -1;
                    for (int t = 0; t < static_cast<int>(basis.size()); ++t)
                        if (basis[t] == k) {
                            pos = t;
                            break;
                        }
                    if (pos < 0) throw std::logic_error("projective: product left the summand");
                    act.at(off + pos, off + col) = f.add(act.at(off + pos, off + col), c);
                }
            }
        }
        m.action.push_back(std::move(act));
    }
    return {std::move(m), std::move(info)};
}

template <class F>
std::pair<FdModule<F>, ProjectiveInfo> projective(const AlgebraPtr<F>& a, int idem_index) {
    if (idem_index < 0 || idem_index >= static_cast<int>(a->idempotents.size()))
        throw std::out_of_range("projective: bad idempotent index");
    return projective_sum(a, {a->idempotents[idem_index]});
}

/// Columns spanning rad(A)*M, deterministically chosen.
template <class F>
Matrix<F> radical_span(const FdModule<F>& m) {
    const F& f = m.field();
    Matrix<F> cols(f, m.dim, 0);
    for (int r : m.alg->radical) cols = Matrix<F>::hstack(cols, m.action[r]);
    return cols.column_space_basis();
}

/// Submodule on the span of the (independent) columns of incl, with the
/// induced action.
template <class F>
FdModule<F> submodule(const FdModule<F>& ambient, const Matrix<F>& incl) {
    FdModule<F> s;
    s.alg = ambient.alg;
    s.dim = static_cast<int>(incl.cols());
    if (s.dim == 0) return zero_module(ambient.alg);
    ColumnSolver<F> solver(incl);
    s.action.reserve(ambient.alg->dim);
    for (int x = 0; x < ambient.alg->dim; ++x) {
        auto y = solver.solve_matrix(ambient.action[x] * incl);
        if (!y) throw std::logic_error("submodule: span is not action-stable");
        s.action.push_back(std::move(*y));
    }
    return s;
}

template <class F>
std::pair<FdModule<F>, Matrix<F>> radical_submodule(const FdModule<F>& m) {
    Matrix<F> incl = radical_span(m);
    return {submodule(m, incl), incl};
}

/// Dimensions of e_i * (M / rad M) for each primitive idempotent.
template <class F>
std::vector<int> top_multiplicities(const FdModule<F>& m) {
    Matrix<F> rad = radical_span(m);
    std::size_t rad_rank = rad.cols();
    std::vector<int> out;
    for (int e : m.alg->idempotents) {
        auto stacked = Matrix<F>::hstack(rad, m.action[e]);
        out.push_back(static_cast<int>(stacked.rank() - rad_rank));
    }
    return out;
}

template <class F>
struct Cover {
    FdModule<F> proj;
    ProjectiveInfo info;
    Matrix<F> epi;  // dim M x dim P, surjective, kernel inside rad P
};

/// Projective cover: one cyclic summand per top generator, mapped onto a
/// lift of a basis of e*(M/rad M).
template <class F>
Cover<F> projective_cover(const FdModule<F>& m) {
    const F& f = m.field();
    const auto& a = *m.alg;
    Matrix<F> rad = radical_span(m);
    std::size_t rad_rank = rad.cols();

    std::vector<int> idems;
    std::vector<std::vector<typename F::Elt>> gens;  // lifted generators in M
    for (int e : a.idempotents) {
        auto stacked = Matrix<F>::hstack(rad, m.action[e]);
        auto piv = stacked.independent_columns();
        for (auto c : piv) {
            if (c < rad_rank) continue;
            idems.push_back(e);
            gens.push_back(m.action[e].column(c - rad_rank));
        }
    }

    auto [proj, info] = projective_sum(m.alg, idems);
    Matrix<F> epi(f, m.dim, proj.dim);
    for (int i = 0; i < proj.dim; ++i) {
        int s = info.coord_summand[i];
        int b = info.coord_elt[i];
        epi.set_column(i, m.action[b].apply(gens[s]));
    }
    if (epi.rank() != static_cast<std::size_t>(m.dim))
        throw std::logic_error("projective_cover: lift is not surjective");
    return Cover<F>{std::move(proj), std::move(info), std::move(epi)};
}

/// Kernel of the cover as a module, with its inclusion into the cover.
template <class F>
std::pair<FdModule<F>, Matrix<F>> cover_kernel(const FdModule<F>& p, const Matrix<F>& epi) {
    Matrix<F> k = epi.kernel_basis();
    return {submodule(p, k), k};
}

template <class F>
FdModule<F> syzygy(const FdModule<F>& m, int steps) {
    if (steps < 0) throw std::invalid_argument("syzygy: steps must be >= 0");
    FdModule<F> cur = m;
    for (int i = 0; i < steps; ++i) {
        if (cur.dim == 0) return cur;
        auto cover = projective_cover(cur);
        cur = cover_kernel(cover.proj, cover.epi).first;
    }
    return cur;
}

/// k-dual: a module over the opposite algebra with transposed actions.
template <class F>
FdModule<F> dual(const FdModule<F>& m, const AlgebraPtr<F>& op_alg) {
    FdModule<F> d;
    d.alg = op_alg;
    d.dim = m.dim;
    d.action.reserve(m.action.size());
    for (const auto& act : m.action) d.action.push_back(act.transpose());
    return d;
}

/// matrix * action_src(g) == action_tgt(g) * matrix on all generators.
template <class F>
bool is_module_map(const FdModule<F>& src, const FdModule<F>& tgt, const Matrix<F>& map) {
    for (int g : src.alg->generators)
        if (!(map * src.action[g] == tgt.action[g] * map)) return false;
    return true;
}

/// Hom(M, N) computed through a projective cover P of M: a hom is a map
/// P -> N given by generator images that kills ker(P -> M). The returned
/// matrices act on M via a fixed linear section of the cover.
template <class F>
std::vector<Matrix<F>> hom_space(const FdModule<F>& m, const FdModule<F>& n) {
    const F& f = m.field();
    if (m.alg != n.alg && !(m.alg->dim == n.alg->dim))
        throw std::invalid_argument("hom_space: algebra mismatch");
    if (m.dim == 0 || n.dim == 0) return {};

    auto cover = projective_cover(m);
    Matrix<F> ker = cover.epi.kernel_basis();
    const ProjectiveInfo& info = cover.info;
    const int ns = info.summands();

    // unknown blocks: coordinates of x_s in a basis of e_s * N
    std::vector<Matrix<F>> block_basis(ns, Matrix<F>(f, 0, 0));
    std::vector<int> block_off(ns, 0);
    int unknowns = 0;
    for (int s = 0; s < ns; ++s) {
        block_basis[s] = n.action[info.summand_idem[s]].column_space_basis();
        block_off[s] = unknowns;
        unknowns += static_cast<int>(block_basis[s].cols());
    }

    // constraints: phi(kappa) = 0 for each kernel basis column kappa
    Matrix<F> sys(f, ker.cols() * n.dim, unknowns);
    for (std::size_t kc = 0; kc < ker.cols(); ++kc) {
        for (int i = 0; i < cover.proj.dim; ++i) {
            const auto& coeff = ker.at(i, kc);
            if (f.is_zero(coeff)) continue;
            int s = info.coord_summand[i];
            // contribution coeff * action_N(b_i) * block_basis[s]
            Matrix<F> contrib = (n.action[info.coord_elt[i]] * block_basis[s]).scale(coeff);
            for (int r = 0; r < n.dim; ++r)
                for (std::size_t c = 0; c < contrib.cols(); ++c)
                    sys.at(kc * n.dim + r, block_off[s] + c) =
                        f.add(sys.at(kc * n.dim + r, block_off[s] + c), contrib.at(r, c));
        }
    }
    Matrix<F> sols = sys.kernel_basis();

    // fixed linear section S of the cover epi (epi * S = id)
    Matrix<F> section(f, cover.proj.dim, m.dim);
    {
        auto aug = Matrix<F>::hstack(cover.epi, Matrix<F>::identity(f, m.dim)).rref();
        for (std::size_t i = 0; i < aug.pivots.size(); ++i) {
            std::size_t pc = aug.pivots[i];
            if (pc >= static_cast<std::size_t>(cover.proj.dim)) throw std::logic_error("cover not surjective");
            for (int j = 0; j < m.dim; ++j) section.at(pc, j) = aug.m.at(i, cover.proj.dim + j);
        }
    }

    std::vector<Matrix<F>> out;
    for (std::size_t sc = 0; sc < sols.cols(); ++sc) {
        // realize x_s and then phi on P, then restrict along the section
        std::vector<std::vector<typename F::Elt>> xs(ns);
        for (int s = 0; s < ns; ++s) {
            std::vector<typename F::Elt> coords(block_basis[s].cols(), f.zero());
            for (std::size_t c = 0; c < block_basis[s].cols(); ++c) coords[c] = sols.at(block_off[s] + c, sc);
            xs[s] = block_basis[s].apply(coords);
        }
        Matrix<F> phi_p(f, n.dim, cover.proj.dim);
        for (int i = 0; i < cover.proj.dim; ++i)
            phi_p.set_column(i, n.action[info.coord_elt[i]].apply(xs[info.coord_summand[i]]));
        out.push_back(phi_p * section);
    }
    return out;
}

enum class IsoVerdict { Isomorphic, DefinitelyNot, NoWitnessFound };

template <class F>
struct IsoResult {
    IsoVerdict verdict = IsoVerdict::NoWitnessFound;
    Matrix<F> witness;  // invertible intertwiner source -> target when Isomorphic
};

/// Randomized isomorphism test with certificate. Positive answers carry a
/// verified invertible intertwiner; negative answers are structural
/// (dimension/top mismatch or zero Hom space) or "no witness found".
template <class F>
IsoResult<F> iso_test(const FdModule<F>& m, const FdModule<F>& n, int trials, std::mt19937_64& rng) {
    const F& f = m.field();
    IsoResult<F> res;
    if (m.dim != n.dim) {
        res.verdict = IsoVerdict::DefinitelyNot;
        return res;
    }
    if (m.dim == 0) {
        res.verdict = IsoVerdict::Isomorphic;
        res.witness = Matrix<F>(f, 0, 0);
        return res;
    }
    if (top_multiplicities(m) != top_multiplicities(n)) {
        res.verdict = IsoVerdict::DefinitelyNot;
        return res;
    }
    auto homs = hom_space(m, n);
    if (homs.empty()) {
        res.verdict = IsoVerdict::DefinitelyNot;
        return res;
    }

    auto try_candidate = [&](const Matrix<F>& cand) -> bool {
        auto inv = cand.inverse();
        if (!inv) return false;
        if (!is_module_map(m, n, cand)) throw std::logic_error("iso_test: hom basis invalid");
        res.verdict = IsoVerdict::Isomorphic;
        res.witness = cand;
        return true;
    };

    // structured candidates first: each basis map, then their plain sum
    for (const auto& h : homs)
        if (try_candidate(h)) return res;
    {
        Matrix<F> sum(f, m.dim, m.dim);
        for (const auto& h : homs) sum = sum.add(h);
        if (try_candidate(sum)) return res;
    }

    const std::int64_t fs = f.size_hint();
    for (int t = 0; t < trials; ++t) {
        Matrix<F> cand(f, m.dim, m.dim);
        for (const auto& h : homs) {
            std::int64_t c;
            if (fs == 0) {
                c = static_cast<std::int64_t>(rng() % 11) - 5;  // small rationals
            } else {
                c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(fs));
            }
            if (c == 0) continue;
            cand = cand.add(h.scale(f.from_long(c)));
        }
        if (try_candidate(cand)) return res;
    }
    res.verdict = IsoVerdict::NoWitnessFound;
    return res;
}

/// Default trial counts: invertible intertwiners are generic over big fields.
inline int default_iso_trials(std::int64_t field_size_hint) {
    return (field_size_hint == 0 || field_size_hint >= kDefaultPrime) ? 64 : 256;
}

/// Asserts (n, p, witness): Omega^{n+p}(M) ~= Omega^n(M) with an explicit
/// invertible module homomorphism.
template <class F>
struct PeriodicityCertificate {
    int n = 0;
    int p = 1;
    Matrix<F> witness;  // Omega^{n+p} -> Omega^n; empty when both are zero
    std::uint64_t seed = 0;
};

}  // namespace tatesyz
