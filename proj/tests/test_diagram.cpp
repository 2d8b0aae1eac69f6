#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fatpoints/diagram.hpp"
#include "fatpoints/errors.hpp"
#include "fatpoints/textio.hpp"

using namespace fatpoints;

namespace {

Diagram pts(std::vector<LatticePoint> v) { return Diagram(std::move(v)); }

AffineCut half(std::int64_t a, std::int64_t b, std::int64_t c) {
    return AffineCut(Rational(a), Rational(b), Rational(1 - 2 * c, 2));
}

} // namespace

TEST_CASE("make_columns matches the worked figures") {
    CHECK(make_columns({{{2, 3}, {1, 0}}}) == pts({{0, 3}, {0, 4}, {1, 0}}));
    CHECK(make_columns({{{2, 3}, {1, 0}, {0, 0}, {3, 2}}}) ==
          pts({{0, 3}, {0, 4}, {1, 0}, {3, 2}, {3, 3}, {3, 4}}));
    CHECK(make_columns({{{3, 0}}}) == pts({{0, 0}, {0, 1}, {0, 2}}));
    CHECK(make_columns({}).empty());
}

TEST_CASE("make_columns cardinality is the column-count sum") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 50; ++it) {
        ColumnSpec spec;
        std::int64_t total = 0;
        int n = static_cast<int>(rng() % 8);
        for (int i = 0; i < n; ++i) {
            std::int64_t a = static_cast<std::int64_t>(rng() % 6);
            spec.columns.push_back({a, static_cast<std::int64_t>(rng() % 5)});
            total += a;
        }
        CHECK(make_columns(spec).size() == static_cast<std::size_t>(total));
    }
}

TEST_CASE("triangle") {
    CHECK(triangle(1) == pts({{0, 0}, {0, 1}, {1, 0}}));
    CHECK(triangle(0) == pts({{0, 0}}));
    CHECK(triangle(21).size() == 253);
    for (std::int64_t d = 0; d <= 100; ++d)
        CHECK(triangle(d).size() == static_cast<std::size_t>((d + 1) * (d + 2) / 2));
}

TEST_CASE("translate") {
    CHECK(translate(pts({{0, 3}, {0, 4}}), {1, -3}) == pts({{1, 0}, {1, 1}}));
    CHECK(translate(pts({{0, 0}}), {0, 0}) == pts({{0, 0}}));
    CHECK_THROWS_AS(translate(pts({{0, 0}}), {-1, 0}), Error);
}

TEST_CASE("equivalent") {
    // prepending an empty column shifts everything by one in x
    Diagram a = make_columns({{{0, 0}, {2, 3}, {1, 0}}});
    Diagram b = make_columns({{{2, 3}, {1, 0}}});
    auto v = equivalent(b, a);
    REQUIRE(v.has_value());
    CHECK(*v == std::make_pair(std::int64_t{-1}, std::int64_t{0}));

    Diagram d = make_columns({{{3, 1}, {2, 0}}});
    auto w = equivalent(d, translate(d, {5, 7}));
    REQUIRE(w.has_value());
    CHECK(*w == std::make_pair(std::int64_t{-5}, std::int64_t{-7}));

    CHECK(!equivalent(pts({{0, 0}}), pts({{0, 0}, {1, 0}})).has_value());
    CHECK(!equivalent(pts({{0, 0}, {2, 0}}), pts({{0, 0}, {1, 0}})).has_value());
}

TEST_CASE("equivalent is an equivalence relation") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 30; ++it) {
        std::vector<LatticePoint> v;
        int n = 1 + static_cast<int>(rng() % 10);
        for (int i = 0; i < n; ++i)
            v.push_back({static_cast<std::int64_t>(rng() % 6),
                         static_cast<std::int64_t>(rng() % 6)});
        Diagram d(v);
        std::pair<std::int64_t, std::int64_t> t{static_cast<std::int64_t>(rng() % 4),
                                                static_cast<std::int64_t>(rng() % 4)};
        auto back = equivalent(d, translate(d, t));
        REQUIRE(back.has_value());
        CHECK(back->first == -t.first);
        CHECK(back->second == -t.second);
        CHECK(equivalent(d, d) == std::make_pair(std::int64_t{0}, std::int64_t{0}));
    }
}

TEST_CASE("split along the twotriangles cut") {
    // D = (3^3,3^2,3^1,3^0), F = y - 3 + 1/2
    Diagram d = make_columns({{{3, 3}, {3, 2}, {3, 1}, {3, 0}}});
    auto [d1, d2] = split(d, half(0, 1, 3));
    CHECK(d1 == make_columns({{{0, 0}, {1, 2}, {2, 1}, {3, 0}}}));
    CHECK(d2 == make_columns({{{3, 3}, {2, 3}, {1, 3}}}));
    CHECK(d1.size() + d2.size() == d.size());
}

TEST_CASE("split edge cases") {
    Diagram d = make_columns({{{2, 0}, {2, 0}}});
    auto [d1, d2] = split(d, AffineCut(Rational(1), Rational(0), Rational(1, 2)));
    CHECK(d1.empty());
    CHECK(d2 == d);
    CHECK_THROWS_AS(split(pts({{2, 0}}), AffineCut(Rational(1), Rational(0), Rational(-2))),
                    Error);
}

TEST_CASE("split partitions any diagram") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 50; ++it) {
        std::vector<LatticePoint> v;
        int n = static_cast<int>(rng() % 15);
        for (int i = 0; i < n; ++i)
            v.push_back({static_cast<std::int64_t>(rng() % 7),
                         static_cast<std::int64_t>(rng() % 7)});
        Diagram d(v);
        auto f = half(static_cast<std::int64_t>(rng() % 2), 1,
                      static_cast<std::int64_t>(rng() % 7));
        auto [d1, d2] = split(d, f);
        CHECK(d1.size() + d2.size() == d.size());
        for (const auto& p : d) CHECK((d1.contains(p) || d2.contains(p)));
        for (const auto& p : d1) CHECK(!d2.contains(p));
    }
}

TEST_CASE("diagram text format round-trips") {
    CHECK(parse_diagram("2^3,1^0") == make_columns({{{2, 3}, {1, 0}}}));
    CHECK(parse_diagram("[(0,3),(0,4),(1,0)]") == make_columns({{{2, 3}, {1, 0}}}));
    CHECK(format_diagram(make_columns({{{2, 3}, {1, 0}}})) == "2^3,1^0");
    // a diagram with a gap in a column falls back to the point list
    Diagram gap = pts({{0, 0}, {0, 2}});
    CHECK(format_diagram(gap) == "[(0,0),(0,2)]");
    CHECK(parse_diagram(format_diagram(gap)) == gap);
    CHECK_THROWS_AS(parse_diagram("[(0,3),"), Error);
    CHECK_THROWS_AS(parse_diagram("2^"), Error);
}

TEST_CASE("multiplicity text format") {
    CHECK(parse_mults("7x6,6x4,1").count() == 11);
    CHECK(parse_mults("7x6,6x4,1").conditions() == 6 * 28 + 4 * 21 + 1);
    CHECK(format_mults(parse_mults("7x6,6x4,1")) == "7x6,6x4,1");
    CHECK(format_mults(parse_mults("3,3")) == "3x2");
    CHECK_THROWS_AS(parse_mults("0"), Error);
    CHECK_THROWS_AS(parse_mults("2,"), Error);
}
