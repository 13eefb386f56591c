#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tatesyz/basis_algebra.hpp"
#include "tatesyz/cohomology.hpp"
#include "tatesyz/quiver.hpp"

namespace tatesyz {

using ordered_json = nlohmann::ordered_json;

inline std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

inline typename RationalField::Elt elt_from_string(const RationalField&, const std::string& s) {
    return typename RationalField::Elt(s);
}

inline typename PrimeField::Elt elt_from_string(const PrimeField& f, const std::string& s) {
    return f.from_long(std::stoll(s));
}

/// Closed integer interval "a..b" (either bound may be negative).
struct DegreeRange {
    int lo = 0, hi = 0;
};

inline DegreeRange parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw std::invalid_argument("range must look like a..b");
    DegreeRange r;
    r.lo = std::stoi(s.substr(0, dots));
    r.hi = std::stoi(s.substr(dots + 2));
    if (r.lo > r.hi) throw std::invalid_argument("empty range");
    return r;
}

inline constexpr const char* kAlgebraDumpSchema = "tate-syzygy/algebra/1";
inline constexpr const char* kReportSchema = "tate-syzygy/1";

/// Basis-algebra dump: a self-contained multiplication-table format
/// loadable by every command (the output of `tensor`).
template <class F>
ordered_json algebra_to_json(const BasisAlgebra<F>& a) {
    ordered_json j;
    j["schema"] = kAlgebraDumpSchema;
    j["field"] = a.field.spec().to_string();
    j["dim"] = a.dim;
    j["labels"] = a.labels;
    j["idempotents"] = a.idempotents;
    j["radical"] = a.radical;
    j["generators"] = a.generators;
    ordered_json table = ordered_json::array();
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k) {
            const auto& prod = a.prod(i, k);
            if (prod.empty()) continue;
            ordered_json terms = ordered_json::array();
            for (const auto& [b, c] : prod) terms.push_back({b, a.field.to_string(c)});
            table.push_back({i, k, terms});
        }
    j["table"] = std::move(table);
    return j;
}

template <class F>
AlgebraPtr<F> algebra_from_json(const F& field, const ordered_json& j) {
    if (!j.contains("schema") || j["schema"] != kAlgebraDumpSchema)
        throw std::invalid_argument("not an algebra dump (bad schema)");
    if (parse_field_spec(j["field"].get<std::string>()) != field.spec())
        throw std::invalid_argument("algebra dump field does not match the requested field");
    auto a = std::make_shared<BasisAlgebra<F>>();
    a->field = field;
    a->dim = j["dim"].get<int>();
    a->labels = j["labels"].get<std::vector<std::string>>();
    a->idempotents = j["idempotents"].get<std::vector<int>>();
    a->radical = j["radical"].get<std::vector<int>>();
    a->generators = j["generators"].get<std::vector<int>>();
    a->table.assign(static_cast<std::size_t>(a->dim) * a->dim, {});
    for (const auto& entry : j["table"]) {
        int i = entry[0].get<int>(), k = entry[1].get<int>();
        Lin<F> prod;
        for (const auto& t : entry[2])
            prod.emplace_back(t[0].get<int>(), elt_from_string(field, t[1].get<std::string>()));
        a->table[i * static_cast<std::size_t>(a->dim) + k] = lin_normalize(field, std::move(prod));
    }
    return a;
}

inline ordered_json table_to_json(const CohomologyTable& t) {
    ordered_json j;
    j["kind"] = t.kind;
    j["range"] = {t.lo, t.hi};
    ordered_json dims = ordered_json::object();
    for (const auto& [deg, d] : t.dims) dims[std::to_string(deg)] = d;
    j["dims"] = std::move(dims);
    return j;
}

inline ordered_json gorenstein_to_json(const GorensteinReport& g) {
    ordered_json j;
    j["status"] = g.status_string();
    if (g.gorenstein) j["d"] = g.d;
    j["bound"] = g.bound;
    return j;
}

inline ordered_json check_json(const std::string& name, ordered_json params, bool pass) {
    ordered_json j;
    j["name"] = name;
    j["params"] = std::move(params);
    j["pass"] = pass;
    return j;
}

}  // namespace tatesyz
