#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fatpoints/errors.hpp"
#include "fatpoints/interp.hpp"
#include "fatpoints/negcurve.hpp"
#include "fatpoints/textio.hpp"

using namespace fatpoints;

TEST_CASE("pairing") {
    CHECK(pairing({1, {1, 1}}, {1, {1, 1}}) == -1);
    CHECK(pairing({2, {1, 1, 1, 1, 1}}, {2, {1, 1, 1, 1, 1}}) == -1);
    CHECK(pairing({2, {2, 2}}, {1, {1, 1}}) == -2);
    CHECK(pairing({3, {2}}, {0, {}}) == 0);
    // shorter list is padded with zeros
    CHECK(pairing({2, {1, 1}}, {5, {1, 1, 1, 1}}) == 8);
}

TEST_CASE("pairing is symmetric and bilinear in degree/mults") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 50; ++it) {
        auto rnd_class = [&]() {
            DivisorClass c{static_cast<std::int64_t>(rng() % 9) - 4, {}};
            int n = static_cast<int>(rng() % 5);
            for (int i = 0; i < n; ++i)
                c.mults.push_back(static_cast<std::int64_t>(rng() % 7) - 3);
            return c;
        };
        DivisorClass a = rnd_class(), b = rnd_class(), c = rnd_class();
        CHECK(pairing(a, b) == pairing(b, a));
        DivisorClass bc{b.d + c.d, {}};
        std::size_t n = std::max(b.mults.size(), c.mults.size());
        for (std::size_t i = 0; i < n; ++i)
            bc.mults.push_back((i < b.mults.size() ? b.mults[i] : 0) +
                               (i < c.mults.size() ? c.mults[i] : 0));
        CHECK(pairing(a, bc) == pairing(a, b) + pairing(a, c));
    }
}

TEST_CASE("divisor class text form") {
    CHECK(DivisorClass{3, {2, 1, 0}}.str() == "(3;2,1)");
    CHECK(DivisorClass{0, {}}.str() == "(0;)");
    CHECK(DivisorClass{3, {2, 1, 0}} == DivisorClass{3, {2, 1}});
}

TEST_CASE("cremona_reduce worked examples") {
    // (2;2,2): t = 2 - 4 = -2 with padded third mult
    auto tr = cremona_reduce({2, {2, 2}});
    CHECK(tr.result == DivisorClass{0, {0, 0, -2}});
    CHECK(tr.moves.size() == 1);

    // an exceptional class is already reduced
    auto e = cremona_reduce({0, {-1}});
    CHECK(e.result == DivisorClass{0, {-1}});
    CHECK(e.moves.empty());

    // (1;1,1) maps to (0;0,0,-1)
    CHECK(cremona_reduce({1, {1, 1}}).result == DivisorClass{0, {0, 0, -1}});

    // the sextic (-1)-class collapses to a single exceptional mult
    auto s = cremona_reduce({6, {3, 2, 2, 2, 2, 2, 2, 2}}).result.normalized();
    CHECK(s.d == 0);
    std::int64_t sum = 0;
    int nonzero = 0;
    for (auto m : s.mults) {
        sum += m;
        if (m != 0) ++nonzero;
    }
    CHECK(sum == -1);
    CHECK(nonzero == 1);
}

TEST_CASE("cremona moves preserve the pairing of the class with itself") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 60; ++it) {
        DivisorClass c{static_cast<std::int64_t>(rng() % 12), {}};
        int n = 3 + static_cast<int>(rng() % 6);
        for (int i = 0; i < n; ++i)
            c.mults.push_back(static_cast<std::int64_t>(rng() % 5));
        auto tr = cremona_reduce(c);
        CHECK(pairing(tr.result, tr.result) == pairing(c, c));
        std::int64_t anti_before = 3 * c.d, anti_after = 3 * tr.result.d;
        for (auto m : c.mults) anti_before -= m;
        for (auto m : tr.result.mults) anti_after -= m;
        CHECK(anti_before == anti_after);
    }
}

TEST_CASE("is_minus_one_class on the standard templates") {
    CHECK(is_minus_one_class({0, {-1}}));
    CHECK(is_minus_one_class({1, {1, 1}}));
    CHECK(is_minus_one_class({2, {1, 1, 1, 1, 1}}));
    CHECK(is_minus_one_class({3, {2, 1, 1, 1, 1, 1, 1}}));
    CHECK(is_minus_one_class({4, {2, 2, 2, 1, 1, 1, 1, 1}}));
    CHECK(is_minus_one_class({5, {2, 2, 2, 2, 2, 2, 1, 1}}));
    CHECK(is_minus_one_class({6, {3, 2, 2, 2, 2, 2, 2, 2}}));

    CHECK_FALSE(is_minus_one_class({1, {1}}));       // self-intersection 0
    CHECK_FALSE(is_minus_one_class({2, {2, 1}}));    // wrong anticanonical degree
    CHECK_FALSE(is_minus_one_class({0, {-1, -1}})); // reducible: two exceptionals
    CHECK_FALSE(is_minus_one_class({3, {2, 2, 1}}));
}

TEST_CASE("find_witness on the double line system") {
    auto w = find_witness(plane_system(2, parse_mults("2x2")));
    REQUIRE(w.has_value());
    CHECK(w->curve_class == DivisorClass{1, {1, 1}});
    CHECK(w->pairing_value == -2);
    CHECK(w->source == "line");
}

TEST_CASE("find_witness on the double conic system") {
    auto w = find_witness(plane_system(4, parse_mults("2x5")));
    REQUIRE(w.has_value());
    CHECK(w->curve_class == DivisorClass{2, {1, 1, 1, 1, 1}});
    CHECK(w->pairing_value == -2);
}

TEST_CASE("find_witness pairs templates against the largest multiplicities") {
    // L_3(1,3,1): the line through the two biggest points meets it in -1;
    // no witness. L_4(3,3,1): the line through the two triple points gives -2.
    CHECK_FALSE(find_witness(plane_system(3, parse_mults("1,3,1"))).has_value());
    auto w = find_witness(plane_system(4, parse_mults("3,3,1")));
    REQUIRE(w.has_value());
    CHECK(w->pairing_value == -2);
    // the witness class puts the line on the two triple points, whichever
    // positions they occupy
    CHECK(pairing(w->curve_class, w->curve_class) == -1);
}

TEST_CASE("find_witness finds nothing for non-special systems") {
    CHECK_FALSE(find_witness(plane_system(2, parse_mults("1x5"))).has_value());
    CHECK_FALSE(find_witness(plane_system(21, parse_mults("7x6,6x4,1"))).has_value());
    CHECK_FALSE(find_witness(plane_system(5, parse_mults("2x5"))).has_value());
}

TEST_CASE("find_witness requires a triangle diagram") {
    LinearSystem L{make_columns({{{2, 0}, {2, 0}}}), parse_mults("1")};
    CHECK_THROWS_AS(find_witness(L), Error);
}

TEST_CASE("witnesses certify speciality on a small sweep") {
    // wherever a witness exists and the system is nonempty, sampling finds
    // dim > edim; this is the forward half of the criterion
    for (std::int64_t d = 1; d <= 7; ++d)
        for (std::int64_t m = 2; m <= 3; ++m)
            for (int r = 1; r * m <= 2 * d; ++r) {
                LinearSystem L = plane_system(
                    d, MultiplicityList(std::vector<std::int64_t>(r, m)));
                auto res = generic_dimension(L, 3, 11);
                auto w = find_witness(L);
                bool special = res.value > L.edim();
                if (w.has_value() && res.value >= 0) {
                    CAPTURE(d);
                    CAPTURE(m);
                    CAPTURE(r);
                    CHECK(special);
                }
            }
}
