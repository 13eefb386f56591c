#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tatesyz {

/// Ground field selector: the rationals or a prime field F_p.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };
    Kind kind = Kind::Rationals;
    std::int64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
    static FieldSpec prime(std::int64_t p) { return FieldSpec{Kind::PrimeField, p}; }

    bool operator==(const FieldSpec&) const = default;

    std::string to_string() const {
        if (kind == Kind::Rationals) return "Q";
        return "F" + std::to_string(p);
    }
};

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Parses "Q", "F<p>" or "F <p>". Throws on anything else.
inline FieldSpec parse_field_spec(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t == "Q" || t == "q") return FieldSpec::rationals();
    if (!t.empty() && (t[0] == 'F' || t[0] == 'f')) {
        std::int64_t p = 0;
        try {
            p = std::stoll(t.substr(1));
        } catch (...) {
            throw std::invalid_argument("bad field spec: " + s);
        }
        if (!is_prime(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
        return FieldSpec::prime(p);
    }
    throw std::invalid_argument("bad field spec: " + s);
}

/// Exact arithmetic over Q with arbitrary-precision rationals.
class RationalField {
public:
    using Elt = boost::multiprecision::cpp_rational;

    FieldSpec spec() const { return FieldSpec::rationals(); }
    std::int64_t size_hint() const { return 0; }  // infinite

    Elt zero() const { return Elt(0); }
    Elt one() const { return Elt(1); }
    Elt from_long(std::int64_t n) const { return Elt(n); }
    Elt from_fraction(std::int64_t num, std::int64_t den) const {
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Elt(num) / Elt(den);
    }

    Elt add(const Elt& a, const Elt& b) const { return a + b; }
    Elt sub(const Elt& a, const Elt& b) const { return a - b; }
    Elt mul(const Elt& a, const Elt& b) const { return a * b; }
    Elt neg(const Elt& a) const { return -a; }
    Elt inv(const Elt& a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return Elt(1) / a;
    }

    bool is_zero(const Elt& a) const { return a == 0; }
    bool eq(const Elt& a, const Elt& b) const { return a == b; }

    std::string to_string(const Elt& a) const { return a.str(); }

    bool operator==(const RationalField&) const = default;
};

/// Exact arithmetic over F_p; elements normalized to [0, p).
class PrimeField {
public:
    using Elt = std::int64_t;

    PrimeField() : p_(2) {}
    explicit PrimeField(std::int64_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
    }

    FieldSpec spec() const { return FieldSpec::prime(p_); }
    std::int64_t modulus() const { return p_; }
    std::int64_t size_hint() const { return p_; }

    Elt zero() const { return 0; }
    Elt one() const { return p_ == 1 ? 0 : 1; }
    Elt from_long(std::int64_t n) const {
        Elt r = n % p_;
        return r < 0 ? r + p_ : r;
    }
    Elt from_fraction(std::int64_t num, std::int64_t den) const {
        return mul(from_long(num), inv(from_long(den)));
    }

    Elt add(Elt a, Elt b) const {
        Elt r = a + b;
        return r >= p_ ? r - p_ : r;
    }
    Elt sub(Elt a, Elt b) const {
        Elt r = a - b;
        return r < 0 ? r + p_ : r;
    }
    Elt mul(Elt a, Elt b) const { return (a * b) % p_; }
    Elt neg(Elt a) const { return a == 0 ? 0 : p_ - a; }
    Elt inv(Elt a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        return t < 0 ? t + p_ : t;
    }

    bool is_zero(Elt a) const { return a == 0; }
    bool eq(Elt a, Elt b) const { return a == b; }

    std::string to_string(Elt a) const { return std::to_string(a); }

    bool operator==(const PrimeField&) const = default;

private:
    std::int64_t p_;
};

inline constexpr std::int64_t kDefaultPrime = 32003;

}  // namespace tatesyz
