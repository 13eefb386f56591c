#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "tatesyz/quiver.hpp"

namespace tatesyz {

/// One projective summand Lambda e_i (x) e_j Lambda in the minimal bimodule
/// resolution of a monomial algebra, recorded by the endpoints of the
/// associated path (target, source).
struct ApEndpoint {
    int target = 0;  // vertex i
    int source = 0;  // vertex j

    auto operator<=>(const ApEndpoint&) const = default;
};

/// Per-degree multiset of projective bimodule summands predicted by the
/// combinatorial (associated-path / Anick chain) resolution of a monomial
/// algebra. Degree 0: one chain per vertex; degree 1: one per arrow;
/// degree 2: one per minimal relation; degree n >= 3: overlap extensions.
/// Throws std::invalid_argument when the presentation is not monomial.
inline std::vector<std::vector<ApEndpoint>> bardzell_summands(const QuiverPresentation& pres,
                                                              int max_degree) {
    if (!is_monomial(pres)) throw std::invalid_argument("bardzell: presentation is not monomial");
    const Quiver& q = pres.quiver;

    // relations as arrow sequences in application order, reduced to the
    // minimal generating set of the monomial ideal: a word containing a
    // shorter relation as a contiguous subword is redundant
    std::vector<std::vector<int>> rels;
    {
        std::set<std::vector<int>> seen;
        std::vector<std::vector<int>> raw;
        for (const auto& r : pres.relations) {
            const auto& w = r.terms.front().path.arrows;
            if (seen.insert(w).second) raw.push_back(w);
        }
        for (const auto& w : raw) {
            bool redundant = false;
            for (const auto& v : raw) {
                if (v.size() >= w.size()) continue;
                for (std::size_t off = 0; off + v.size() <= w.size() && !redundant; ++off)
                    if (std::equal(v.begin(), v.end(), w.begin() + off)) redundant = true;
                if (redundant) break;
            }
            if (!redundant) rels.push_back(w);
        }
    }

    std::vector<std::vector<ApEndpoint>> out;
    // chains[n]: (path in application order, length of the relation covering
    // the application-order front of the path).  Written order is reversed
    // application order, so chains grow at the application-order front.
    using Chain = std::pair<std::vector<int>, int>;
    std::vector<std::vector<Chain>> chains;

    out.emplace_back();
    for (int v = 0; v < static_cast<int>(q.vertices.size()); ++v)
        out.back().push_back(ApEndpoint{v, v});
    chains.push_back({});  // vertex chains carry no arrows

    if (max_degree >= 1) {
        out.emplace_back();
        chains.emplace_back();
        for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
            chains.back().push_back({{a}, 1});
            out.back().push_back(ApEndpoint{q.arrows[a].target, q.arrows[a].source});
        }
    }
    if (max_degree >= 2) {
        out.emplace_back();
        chains.emplace_back();
        for (const auto& w : rels) {
            chains.back().push_back({w, static_cast<int>(w.size())});
            out.back().push_back(
                ApEndpoint{q.arrows[w.back()].target, q.arrows[w.front()].source});
        }
    }

    auto is_suffix = [](const std::vector<int>& small, const std::vector<int>& big) {
        if (small.size() > big.size()) return false;
        return std::equal(small.begin(), small.end(), big.end() - small.size());
    };

    for (int n = 3; n <= max_degree; ++n) {
        const auto& prev = chains[n - 1];
        std::set<Chain> next_set;
        for (const auto& [c, last_len] : prev) {
            // extensions: relation r whose application-order suffix overlaps
            // the chain front by ov arrows, starting strictly inside the
            // chain's last relation (ov < last_len) and extending past the
            // chain (ov < |r|)
            std::vector<Chain> exts;  // (extension word, |r|)
            for (const auto& r : rels) {
                int max_ov = std::min({static_cast<int>(r.size()) - 1, last_len - 1,
                                       static_cast<int>(c.size())});
                for (int ov = 1; ov <= max_ov; ++ov) {
                    // last ov arrows of r == first ov arrows of c
                    if (!std::equal(r.end() - ov, r.end(), c.begin())) continue;
                    exts.push_back({{r.begin(), r.end() - ov}, static_cast<int>(r.size())});
                }
            }
            if (exts.empty()) continue;
            // minimality: drop any extension with a strictly shorter kept
            // extension as an application-order suffix
            std::sort(exts.begin(), exts.end(), [](const Chain& a, const Chain& b) {
                return a.first.size() < b.first.size() ||
                       (a.first.size() == b.first.size() && a.first < b.first);
            });
            std::vector<Chain> kept;
            for (const auto& e : exts) {
                bool dominated = false;
                for (const auto& k : kept)
                    if (k.first.size() < e.first.size() && is_suffix(k.first, e.first)) {
                        dominated = true;
                        break;
                    }
                if (!dominated) kept.push_back(e);
            }
            for (const auto& [ext, rlen] : kept) {
                std::vector<int> nc = ext;
                nc.insert(nc.end(), c.begin(), c.end());
                next_set.insert({std::move(nc), rlen});
            }
        }
        chains.emplace_back(next_set.begin(), next_set.end());
        out.emplace_back();
        for (const auto& [w, rlen] : chains.back())
            out.back().push_back(
                ApEndpoint{q.arrows[w.back()].target, q.arrows[w.front()].source});
        std::sort(out.back().begin(), out.back().end());
    }
    for (auto& deg : out) std::sort(deg.begin(), deg.end());
    return out;
}

}  // namespace tatesyz
