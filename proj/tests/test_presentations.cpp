#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>
#include <fstream>
#include <sstream>

#include "tatesyz/basis_algebra.hpp"
#include "tatesyz/path_basis.hpp"

using namespace tatesyz;

namespace {

std::string data_file(const char* name) {
    const char* dir = std::getenv("TATESYZ_DATA");
    REQUIRE(dir != nullptr);
    std::ifstream in(std::string(dir) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

PathAlgebra<RationalField> build(const std::string& src) {
    RationalField f;
    return enumerate_basis(f, parse_presentation(src), 30);
}

}  // namespace

TEST_CASE("bundled presentations have the expected dimensions") {
    struct Row {
        const char* file;
        int dim;
        int idems;
    };
    const Row rows[] = {
        {"point.alg", 1, 1},  {"kx2.alg", 2, 1},     {"gamma1.alg", 3, 2},
        {"lambda1.alg", 7, 2}, {"lambda2.alg", 5, 2}, {"a.alg", 6, 2},
    };
    for (const auto& r : rows) {
        CAPTURE(r.file);
        auto pa = build(data_file(r.file));
        CHECK(pa.algebra->dim == r.dim);
        CHECK(static_cast<int>(pa.algebra->idempotents.size()) == r.idems);
        std::mt19937_64 rng(1);
        CHECK(check_associativity(*pa.algebra, rng));
        CHECK(check_idempotents(*pa.algebra));
    }
}

TEST_CASE("basis of lambda1 is ordered by length then written label") {
    auto pa = build(data_file("lambda1.alg"));
    std::vector<std::string> labels;
    for (const auto& e : pa.elements) labels.push_back(e.label);
    std::vector<std::string> expect = {"e_1", "e_2", "a", "b", "a*b", "b*a", "b*a*b"};
    CHECK(labels == expect);
}

TEST_CASE("composition follows first-q-then-p order") {
    auto pa = build(data_file("lambda1.alg"));
    auto idx = [&](const std::string& l) {
        for (std::size_t i = 0; i < pa.elements.size(); ++i)
            if (pa.elements[i].label == l) return static_cast<int>(i);
        return -1;
    };
    const auto& a = *pa.algebra;
    RationalField f;
    // written a*b = apply b first, then a; lands in the "a*b" basis class
    auto prod = a.prod(idx("a"), idx("b"));
    REQUIRE(prod.size() == 1);
    CHECK(prod[0].first == idx("a*b"));
    CHECK(f.eq(prod[0].second, f.one()));
    // the relation kills a*b*a while b*a*b survives
    CHECK(a.prod(idx("a"), idx("b*a")).empty());
    REQUIRE(a.prod(idx("b"), idx("a*b")).size() == 1);
    CHECK(a.prod(idx("b"), idx("a*b"))[0].first == idx("b*a*b"));
    // idempotents act as units on their own paths
    CHECK(a.prod(idx("e_2"), idx("a")).size() == 1);
    CHECK(a.prod(idx("e_1"), idx("a")).empty());
}

TEST_CASE("non-monomial relation is rewritten into the quotient basis") {
    auto pa = build(data_file("a.alg"));
    CHECK(!is_monomial(pa.pres));
    auto idx = [&](const std::string& l) {
        for (std::size_t i = 0; i < pa.elements.size(); ++i)
            if (pa.elements[i].label == l) return static_cast<int>(i);
        return -1;
    };
    // b*a and c*b are identified: the class of the written word "b*a"
    // survives and multiplying c into b reproduces it
    int b = idx("b"), a = idx("a"), c = idx("c");
    REQUIRE(b >= 0);
    REQUIRE(a >= 0);
    REQUIRE(c >= 0);
    auto ba = pa.algebra->prod(b, a);
    auto cb = pa.algebra->prod(c, b);
    REQUIRE(ba.size() == 1);
    REQUIRE(cb.size() == 1);
    CHECK(ba[0].first == cb[0].first);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_presentation("vertices 1\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("field Q\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("field Q\nvertices 1\narrow x : 1 -> 2\n"), ParseError);
    CHECK_THROWS_AS(
        parse_presentation("field Q\nvertices 1\narrow x : 1 -> 1\nrelation y*y\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("field Q\nvertices 1\narrow x : 1 -> 1\nrelation x\n"),
                    ParseError);
    // not length-homogeneous
    CHECK_THROWS_AS(parse_presentation(
                        "field Q\nvertices 1\narrow x : 1 -> 1\nrelation x*x + x*x*x\n"),
                    ParseError);
    // bad field modulus
    CHECK_THROWS_AS(parse_presentation("field F 4\nvertices 1\n"), ParseError);
}

TEST_CASE("unbounded quotient raises instead of looping") {
    RationalField f;
    auto pres = parse_presentation("field Q\nvertices 1\narrow x : 1 -> 1\n");
    CHECK_THROWS_AS(enumerate_basis(f, pres, 10), InfiniteDimensionalError);
}

TEST_CASE("presentation round-trips through its printed form") {
    for (const char* file : {"lambda1.alg", "lambda2.alg", "a.alg", "kx2_f2.alg"}) {
        CAPTURE(file);
        auto pres = parse_presentation(data_file(file));
        auto reparsed = parse_presentation(presentation_to_string(pres));
        RationalField q;
        PrimeField f2{2};
        if (pres.field.kind == FieldSpec::Kind::Rationals) {
            CHECK(enumerate_basis(q, pres, 30).algebra->dim ==
                  enumerate_basis(q, reparsed, 30).algebra->dim);
        } else {
            CHECK(enumerate_basis(f2, pres, 30).algebra->dim ==
                  enumerate_basis(f2, reparsed, 30).algebra->dim);
        }
        CHECK(pres.quiver.vertices == reparsed.quiver.vertices);
        CHECK(pres.relations.size() == reparsed.relations.size());
    }
}

TEST_CASE("scalar coefficients in relations are honored") {
    // x*y = 2 y*x forces the products into one class with ratio 2
    RationalField f;
    auto pres = parse_presentation(
        "field Q\nvertices 1\narrow x : 1 -> 1\narrow y : 1 -> 1\n"
        "relation x*x\nrelation y*y\nrelation x*y - 2*y*x\nrelation x*y*x\nrelation y*x*y\n");
    auto pa = enumerate_basis(f, pres, 30);
    auto idx = [&](const std::string& l) {
        for (std::size_t i = 0; i < pa.elements.size(); ++i)
            if (pa.elements[i].label == l) return static_cast<int>(i);
        return -1;
    };
    auto xy = pa.algebra->prod(idx("x"), idx("y"));
    auto yx = pa.algebra->prod(idx("y"), idx("x"));
    REQUIRE(xy.size() == 1);
    REQUIRE(yx.size() == 1);
    CHECK(xy[0].first == yx[0].first);
    CHECK(f.eq(xy[0].second, f.mul(f.from_long(2), yx[0].second)));
}
