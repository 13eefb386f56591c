#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "tatesyz/basis_algebra.hpp"
#include "tatesyz/matrix.hpp"
#include "tatesyz/quiver.hpp"

namespace tatesyz {

struct PathBasisElement {
    int vertex = -1;          // for degree-0 elements
    Path path;                // application-order arrows (empty for idempotents)
    int degree = 0;
    int source = 0, target = 0;
    std::string label;
};

struct InfiniteDimensionalError : std::runtime_error {
    explicit InfiniteDimensionalError(int bound)
        : std::runtime_error("quotient still nonzero at path length " + std::to_string(bound) +
                             "; infinite-dimensional or bound too small"),
          bound(bound) {}
    int bound;
};

/// The quotient path algebra with its normal-form path basis.
///
/// Basis order: by path length, then lexicographically on the written
/// arrow-label sequence; degree 0 is the vertex idempotents.
template <class F>
struct PathAlgebra {
    QuiverPresentation pres;
    std::vector<PathBasisElement> elements;
    AlgebraPtr<F> algebra;

    // normal form of an arbitrary composable path (zero if absent)
    Lin<F> path_class(const Path& p) const {
        if (p.length() == 0) throw std::invalid_argument("path_class: empty path");
        auto it = word_nf_.find(p.arrows);
        if (it == word_nf_.end()) return {};
        return it->second;
    }

    std::map<std::vector<int>, Lin<F>> word_nf_;  // word (application order) -> class
};

namespace detail {

// written-order label sequence for sorting
inline std::vector<std::string> written_labels(const Quiver& q, const Path& p) {
    std::vector<std::string> out;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) out.push_back(q.arrows[*it].label);
    return out;
}

}  // namespace detail

/// Enumerates the path basis of the quotient algebra degree by degree.
/// At each length the span of all surviving paths is quotiented by the
/// degree component of the two-sided relation ideal, computed by one-step
/// arrow extensions of the previous component plus the relations of that
/// degree, followed by row reduction. Stops at the first length that
/// contributes no nonzero classes; throws if still nonzero at the bound.
template <class F>
PathAlgebra<F> enumerate_basis(const F& field, const QuiverPresentation& pres, int length_bound = 30) {
    if (length_bound < 1) throw std::invalid_argument("length_bound must be >= 1");
    const Quiver& q = pres.quiver;
    const int nv = static_cast<int>(q.vertices.size());

    PathAlgebra<F> pa;
    pa.pres = pres;

    // degree 0: vertex idempotents
    for (int v = 0; v < nv; ++v) {
        PathBasisElement e;
        e.vertex = v;
        e.degree = 0;
        e.source = e.target = v;
        e.label = "e_" + q.vertices[v];
        pa.elements.push_back(e);
    }

    // per-degree working data
    struct DegreeData {
        std::vector<Path> cands;                        // sorted
        std::map<std::vector<int>, int> index;          // word -> candidate index
        std::vector<std::vector<typename F::Elt>> ideal_rows;  // rref rows
        std::vector<int> nonpruned;                     // candidate indices with nonzero class
    };
    std::vector<DegreeData> degs(1);  // index by degree; degree 0 unused

    // degree 1: arrows (never in the ideal; relations have length >= 2)
    {
        DegreeData d1;
        for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) d1.cands.push_back(Path{{a}});
        std::sort(d1.cands.begin(), d1.cands.end(), [&](const Path& x, const Path& y) {
            return detail::written_labels(q, x) < detail::written_labels(q, y);
        });
        for (int i = 0; i < static_cast<int>(d1.cands.size()); ++i) {
            d1.index[d1.cands[i].arrows] = i;
            d1.nonpruned.push_back(i);
        }
        for (const auto& p : d1.cands) {
            PathBasisElement e;
            e.path = p;
            e.degree = 1;
            e.source = path_source(q, p);
            e.target = path_target(q, p);
            e.label = path_label(q, p);
            pa.elements.push_back(e);
            pa.word_nf_[p.arrows] = Lin<F>{{static_cast<int>(pa.elements.size()) - 1, field.one()}};
        }
        degs.push_back(std::move(d1));
    }

    for (int deg = 2; deg <= length_bound + 1; ++deg) {
        const DegreeData& prev = degs[deg - 1];
        DegreeData cur;

        for (int pi : prev.nonpruned) {
            const Path& p = prev.cands[pi];
            int tgt = path_target(q, p);
            for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
                if (q.arrows[a].source != tgt) continue;
                Path np = p;
                np.arrows.push_back(a);
                cur.cands.push_back(std::move(np));
            }
        }
        if (cur.cands.empty()) break;
        std::sort(cur.cands.begin(), cur.cands.end(), [&](const Path& x, const Path& y) {
            return detail::written_labels(q, x) < detail::written_labels(q, y);
        });
        for (int i = 0; i < static_cast<int>(cur.cands.size()); ++i) cur.index[cur.cands[i].arrows] = i;

        const int nc = static_cast<int>(cur.cands.size());
        std::vector<std::vector<typename F::Elt>> rows;
        auto add_row = [&](std::vector<typename F::Elt> r) {
            bool nz = false;
            for (const auto& x : r)
                if (!field.is_zero(x)) {
                    nz = true;
                    break;
                }
            if (nz) rows.push_back(std::move(r));
        };

        // relations of this degree
        for (const auto& rel : pres.relations) {
            if (rel.degree() != deg) continue;
            std::vector<typename F::Elt> r(nc, field.zero());
            for (const auto& t : rel.terms) {
                auto it = cur.index.find(t.path.arrows);
                if (it == cur.index.end()) continue;  // term already zero
                r[it->second] = field.add(r[it->second],
                                          field.from_fraction(t.coeff.num, t.coeff.den));
            }
            add_row(std::move(r));
        }

        // one-step arrow extensions of the previous ideal component
        for (const auto& prow : prev.ideal_rows) {
            for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
                std::vector<typename F::Elt> left(nc, field.zero()), right(nc, field.zero());
                bool has_l = false, has_r = false;
                for (int ci = 0; ci < static_cast<int>(prow.size()); ++ci) {
                    if (field.is_zero(prow[ci])) continue;
                    const Path& w = prev.cands[ci];
                    // a applied after w
                    if (q.arrows[a].source == path_target(q, w)) {
                        std::vector<int> nw = w.arrows;
                        nw.push_back(a);
                        auto it = cur.index.find(nw);
                        if (it != cur.index.end()) {
                            left[it->second] = field.add(left[it->second], prow[ci]);
                            has_l = true;
                        }
                    }
                    // a applied before w
                    if (q.arrows[a].target == path_source(q, w)) {
                        std::vector<int> nw;
                        nw.push_back(a);
                        nw.insert(nw.end(), w.arrows.begin(), w.arrows.end());
                        auto it = cur.index.find(nw);
                        if (it != cur.index.end()) {
                            right[it->second] = field.add(right[it->second], prow[ci]);
                            has_r = true;
                        }
                    }
                }
                if (has_l) add_row(std::move(left));
                if (has_r) add_row(std::move(right));
            }
        }

        // row-reduce the ideal component
        Matrix<F> m(field, rows.size(), nc);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
        auto rr = m.rref();
        std::vector<bool> is_pivot(nc, false);
        std::vector<int> pivot_row(nc, -1);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
            is_pivot[rr.pivots[i]] = true;
            pivot_row[rr.pivots[i]] = static_cast<int>(i);
        }

        const int quotient_dim = nc - static_cast<int>(rr.pivots.size());
        if (quotient_dim == 0) break;
        if (deg > length_bound) throw InfiniteDimensionalError(length_bound);

        // new basis elements: non-pivot candidates
        std::vector<int> basis_of_cand(nc, -1);
        for (int ci = 0; ci < nc; ++ci) {
            if (is_pivot[ci]) continue;
            PathBasisElement e;
            e.path = cur.cands[ci];
            e.degree = deg;
            e.source = path_source(q, e.path);
            e.target = path_target(q, e.path);
            e.label = path_label(q, e.path);
            pa.elements.push_back(e);
            basis_of_cand[ci] = static_cast<int>(pa.elements.size()) - 1;
        }

        // normal form of every candidate
        for (int ci = 0; ci < nc; ++ci) {
            Lin<F> nf;
            if (!is_pivot[ci]) {
                nf.emplace_back(basis_of_cand[ci], field.one());
            } else {
                // e_ci reduced by the rref rows: e_ci ≡ -(row tail on free cols)
                int r = pivot_row[ci];
                for (int j = 0; j < nc; ++j)
                    if (!is_pivot[j] && !field.is_zero(rr.m.at(r, j)))
                        nf.emplace_back(basis_of_cand[j], field.neg(rr.m.at(r, j)));
            }
            // pruned candidates (class zero) stay out of word_nf_
            if (!nf.empty()) pa.word_nf_[cur.cands[ci].arrows] = std::move(nf);
        }
        for (int ci = 0; ci < nc; ++ci)
            if (pa.word_nf_.count(cur.cands[ci].arrows)) cur.nonpruned.push_back(ci);

        // store rref rows for the next extension step
        cur.ideal_rows.resize(rr.pivots.size());
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
            cur.ideal_rows[i].assign(nc, field.zero());
            for (int j = 0; j < nc; ++j) cur.ideal_rows[i][j] = rr.m.at(i, j);
        }
        degs.push_back(std::move(cur));
    }

    // assemble the BasisAlgebra
    auto alg = std::make_shared<BasisAlgebra<F>>();
    alg->field = field;
    alg->dim = static_cast<int>(pa.elements.size());
    for (const auto& e : pa.elements) alg->labels.push_back(e.label);
    alg->table.assign(static_cast<std::size_t>(alg->dim) * alg->dim, {});
    for (int i = 0; i < alg->dim; ++i) {
        const auto& bi = pa.elements[i];
        for (int j = 0; j < alg->dim; ++j) {
            const auto& bj = pa.elements[j];
            Lin<F> prod;
            if (bi.degree == 0 && bj.degree == 0) {
                if (bi.vertex == bj.vertex) prod.emplace_back(i, field.one());
            } else if (bi.degree == 0) {
                if (bj.target == bi.vertex) prod.emplace_back(j, field.one());
            } else if (bj.degree == 0) {
                if (bi.source == bj.vertex) prod.emplace_back(i, field.one());
            } else if (bj.target == bi.source) {
                // b_i * b_j: apply b_j first, then b_i
                std::vector<int> w = bj.path.arrows;
                w.insert(w.end(), bi.path.arrows.begin(), bi.path.arrows.end());
                auto it = pa.word_nf_.find(w);
                if (it != pa.word_nf_.end()) prod = it->second;
            }
            alg->table[i * static_cast<std::size_t>(alg->dim) + j] = std::move(prod);
        }
    }
    for (int v = 0; v < nv; ++v) alg->idempotents.push_back(v);
    for (int i = nv; i < alg->dim; ++i) alg->radical.push_back(i);
    alg->generators = alg->idempotents;
    for (int i = 0; i < alg->dim; ++i)
        if (pa.elements[i].degree == 1) alg->generators.push_back(i);
    pa.algebra = alg;
    return pa;
}

/// Class of the composite pq ("first q, then p") in the quotient algebra.
template <class F>
Lin<F> compose(const PathAlgebra<F>& pa, const Path& p, const Path& q) {
    const Quiver& qv = pa.pres.quiver;
    if (path_target(qv, q) != path_source(qv, p)) return {};
    std::vector<int> w = q.arrows;
    w.insert(w.end(), p.arrows.begin(), p.arrows.end());
    return pa.path_class(Path{w});
}

template <class F>
AlgebraPtr<F> from_presentation(const F& field, const QuiverPresentation& pres,
                                int length_bound = 30) {
    return enumerate_basis(field, pres, length_bound).algebra;
}

}  // namespace tatesyz
