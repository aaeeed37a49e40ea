#include <catch2/catch_amalgamated.hpp>

#include "mcmlab/groebner.hpp"
#include "mcmlab/parse.hpp"
#include "mcmlab/rng.hpp"
#include "oracle.hpp"

using namespace mcmlab;
using mcmlab::testing::oracle_member;
using mcmlab::testing::oracle_member_ideal;

namespace {

GradedRing poly_ring(const std::vector<std::string>& vars, long long p = 32003) {
    return GradedRing(Field(p), vars, {});
}

GradedRing quotient_ring(const std::vector<std::string>& vars,
                         const std::vector<std::string>& gens, long long p = 32003) {
    Field k(p);
    std::vector<Poly> ideal;
    for (const auto& s : gens) ideal.push_back(parse_poly(k, vars, s));
    return GradedRing(k, vars, ideal);
}

Poly pp(const GradedRing& ring, const std::string& s) {
    return parse_poly(ring.field(), ring.vars(), s);
}

bool same_poly_set(const Field& k, const std::vector<Poly>& a, const std::vector<Poly>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& f : a) {
        bool found = false;
        for (const auto& g : b) found = found || f.equals(k, g);
        if (!found) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("buchberger on single monomial and on a monomial pair") {
    GradedRing S = poly_ring({"x", "y"});
    auto gb1 = ideal_groebner(S, Side::S, {pp(S, "x*y")});
    REQUIRE(same_poly_set(S.field(), gb1, {pp(S, "x*y")}));

    auto gb2 = ideal_groebner(S, Side::S, {pp(S, "x^2"), pp(S, "x*y")});
    REQUIRE(same_poly_set(S.field(), gb2, {pp(S, "x^2"), pp(S, "x*y")}));
}

TEST_CASE("buchberger finds the y^3 element") {
    GradedRing S = poly_ring({"x", "y"});
    std::vector<Poly> gens{pp(S, "x^2 + y^2"), pp(S, "x*y")};
    auto gb = ideal_groebner(S, Side::S, gens);
    REQUIRE(same_poly_set(S.field(), gb, {pp(S, "x*y"), pp(S, "x^2 + y^2"), pp(S, "y^3")}));

    // Degreewise oracle agreement up to degree 6.
    ModuleGB mgb = module_groebner(S, Side::S, {{gens[0]}, {gens[1]}}, {0});
    for (int d = 0; d <= 6; ++d)
        for (const auto& m : monomials_of_degree(2, d)) {
            Poly f = Poly::monomial(S.field(), m, S.field().one());
            bool via_gb = poly_normal_form(S, mgb, f).is_zero();
            bool via_oracle = oracle_member_ideal(S, Side::S, gens, f);
            REQUIRE(via_gb == via_oracle);
        }
}

TEST_CASE("buchberger rejects non-homogeneous input") {
    GradedRing S = poly_ring({"x", "y"});
    REQUIRE_THROWS_AS(ideal_groebner(S, Side::S, {pp(S, "x^2 + y")}), std::invalid_argument);
}

TEST_CASE("normal forms against simple bases") {
    GradedRing S = poly_ring({"x", "y"});
    ModuleGB gb_xy = module_groebner(S, Side::S, {{pp(S, "x*y")}}, {0});
    REQUIRE(poly_normal_form(S, gb_xy, pp(S, "x^2*y")).is_zero());
    REQUIRE(poly_normal_form(S, gb_xy, pp(S, "x^2")).equals(S.field(), pp(S, "x^2")));

    ModuleGB gb2 = module_groebner(S, Side::S, {{pp(S, "x^2 + y^2")}, {pp(S, "x*y")}}, {0});
    REQUIRE(poly_normal_form(S, gb2, pp(S, "y^4")).is_zero());
    // Idempotence.
    Poly nf = poly_normal_form(S, gb2, pp(S, "x^3 + x*y^2"));
    REQUIRE(poly_normal_form(S, gb2, nf).equals(S.field(), nf));
}

TEST_CASE("normal form is additive on equal-degree homogeneous pairs") {
    GradedRing S = poly_ring({"x", "y", "z"});
    DetRng rng(3);
    std::vector<Poly> gens{pp(S, "x*y - z^2"), pp(S, "y^3")};
    ModuleGB gb = module_groebner(S, Side::S, {{gens[0]}, {gens[1]}}, {0});
    for (int trial = 0; trial < 20; ++trial) {
        int d = rng.uniform_int(1, 5);
        auto mons = monomials_of_degree(3, d);
        std::vector<Term> ta, tb;
        for (const auto& m : mons) {
            ta.push_back(Term{m, S.field().from_int(rng.uniform_int(-4, 4))});
            tb.push_back(Term{m, S.field().from_int(rng.uniform_int(-4, 4))});
        }
        Poly f = Poly::make(S.field(), ta), g = Poly::make(S.field(), tb);
        Poly lhs = poly_normal_form(S, gb, poly_add(S.field(), f, g));
        Poly rhs = poly_add(S.field(), poly_normal_form(S, gb, f), poly_normal_form(S, gb, g));
        REQUIRE(lhs.equals(S.field(), rhs));
    }
}

TEST_CASE("membership agrees with the degreewise oracle on random ideals") {
    DetRng rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        int nv = rng.uniform_int(1, 3);
        std::vector<std::string> vars(static_cast<size_t>(nv));
        const char* names[] = {"x", "y", "z"};
        for (int i = 0; i < nv; ++i) vars[i] = names[i];
        GradedRing S = poly_ring(vars);
        int ngens = rng.uniform_int(1, 3);
        std::vector<Poly> gens;
        for (int g = 0; g < ngens; ++g) {
            int d = rng.uniform_int(1, 3);
            std::vector<Term> terms;
            for (const auto& m : monomials_of_degree(nv, d))
                terms.push_back(Term{m, S.field().from_int(rng.uniform_int(-2, 2))});
            Poly f = Poly::make(S.field(), terms);
            if (!f.is_zero()) gens.push_back(f);
        }
        if (gens.empty()) continue;
        std::vector<PolyVec> cols;
        for (const auto& g : gens) cols.push_back(PolyVec{g});
        ModuleGB gb = module_groebner(S, Side::S, cols, {0});
        for (int d = 0; d <= 6; ++d)
            for (const auto& m : monomials_of_degree(nv, d)) {
                Poly f = Poly::monomial(S.field(), m, S.field().one());
                REQUIRE(poly_normal_form(S, gb, f).is_zero() ==
                        oracle_member_ideal(S, Side::S, gens, f));
            }
    }
}

TEST_CASE("reduced basis invariants and determinism") {
    GradedRing S = poly_ring({"x", "y", "z"});
    std::vector<Poly> gens{pp(S, "x^2 - y*z"), pp(S, "x*y - z^2"), pp(S, "y^2 - x*z")};
    auto a = ideal_groebner(S, Side::S, gens);
    auto b = ideal_groebner(S, Side::S, gens);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) REQUIRE(a[i].equals(S.field(), b[i]));
    for (size_t i = 0; i < a.size(); ++i) {
        REQUIRE(S.field().is_one(a[i].lead().c));
        for (size_t j = 0; j < a.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : a[i].terms()) REQUIRE(!divides(a[j].lead().m, t.m));
        }
    }
}

TEST_CASE("syzygies of [x y] over the polynomial ring") {
    GradedRing S = poly_ring({"x", "y"});
    std::vector<PolyVec> cols{{pp(S, "x")}, {pp(S, "y")}};
    // Columns of the 1x2 matrix [x y] as elements of S^2 -> S: the kernel
    // lives in S(-1)^2.
    std::vector<PolyVec> mat_cols;
    mat_cols.push_back(PolyVec{pp(S, "x")});
    mat_cols.push_back(PolyVec{pp(S, "y")});
    auto syz = syzygy_generators(S, Side::S, mat_cols, {0});
    REQUIRE(!syz.empty());
    PolyVec koszul{pp(S, "y"), poly_neg(S.field(), pp(S, "x"))};
    // Mutual containment of spans inside S(-1)^2.
    std::vector<int> tw{1, 1};
    for (const auto& s : syz) {
        REQUIRE(vec_degree(s, tw).value() == 2);
        REQUIRE(oracle_member(S, Side::S, {koszul}, tw, s));
    }
    REQUIRE(oracle_member(S, Side::S, syz, tw, koszul));
}

TEST_CASE("syzygies of [x y] over k[x,y]/(xy)") {
    GradedRing R = quotient_ring({"x", "y"}, {"x*y"});
    std::vector<PolyVec> cols{{pp(R, "x")}, {pp(R, "y")}};
    auto syz = syzygy_generators(R, Side::R, cols, {0});
    std::vector<int> tw{1, 1};
    PolyVec g1{pp(R, "y"), Poly()};
    PolyVec g2{Poly(), pp(R, "x")};
    for (const auto& s : syz) REQUIRE(oracle_member(R, Side::R, {g1, g2}, tw, s));
    REQUIRE(oracle_member(R, Side::R, syz, tw, g1));
    REQUIRE(oracle_member(R, Side::R, syz, tw, g2));
}

TEST_CASE("syzygies of [x] over k[x]/(x^2)") {
    GradedRing R = quotient_ring({"x"}, {"x^2"});
    auto syz = syzygy_generators(R, Side::R, {{pp(R, "x")}}, {0});
    std::vector<int> tw{1};
    PolyVec g{pp(R, "x")};
    REQUIRE(!syz.empty());
    for (const auto& s : syz) REQUIRE(oracle_member(R, Side::R, {g}, tw, s));
    REQUIRE(oracle_member(R, Side::R, syz, tw, g));
}

TEST_CASE("lift_through recovers membership witnesses") {
    GradedRing S = poly_ring({"x", "y"});
    std::vector<PolyVec> cols{{pp(S, "x^2 + y^2")}, {pp(S, "x*y")}};
    Poly target = pp(S, "y^4");
    auto lift = lift_through(S, Side::S, cols, {0}, PolyVec{target});
    REQUIRE(lift.has_value());
    Poly check = poly_add(S.field(), poly_mul(S.field(), (*lift)[0], pp(S, "x^2 + y^2")),
                          poly_mul(S.field(), (*lift)[1], pp(S, "x*y")));
    REQUIRE(check.equals(S.field(), target));
    REQUIRE(!lift_through(S, Side::S, cols, {0}, PolyVec{pp(S, "y^2")}).has_value());
}
