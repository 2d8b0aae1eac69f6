#ifndef FATPOINTS_DIAGRAM_HPP
#define FATPOINTS_DIAGRAM_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fatpoints/rational.hpp"

namespace fatpoints {

// A point of N^2, the exponent pair of a monomial x^x_ * y^y_.
struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Finite subset of N^2 kept sorted by (x, y); the monomial support of a
// linear system. Immutable after construction.
class Diagram {
public:
    Diagram() = default;
    explicit Diagram(std::vector<LatticePoint> points);

    const std::vector<LatticePoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    bool contains(const LatticePoint& p) const;

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    friend bool operator==(const Diagram&, const Diagram&) = default;

private:
    std::vector<LatticePoint> points_; // sorted, unique
};

// Column notation (a_1^u_1, ..., a_n^u_n): column i-1 holds a_i points
// starting at height u_i. a_i = 0 is an empty column.
struct ColumnSpec {
    struct Column {
        std::int64_t count = 0;  // a_i
        std::int64_t offset = 0; // u_i
        friend bool operator==(const Column&, const Column&) = default;
    };
    std::vector<Column> columns;
};

// F(x,y) = r1*x + r2*y + r0 with rational coefficients, (r1,r2) != (0,0).
// Signs are evaluated exactly after clearing denominators.
struct AffineCut {
    Rational r1, r2, r0;

    AffineCut(Rational a, Rational b, Rational c);

    // sign of F(p)
    int sign_at(const LatticePoint& p) const;

    friend bool operator==(const AffineCut&, const AffineCut&) = default;
};

Diagram make_columns(const ColumnSpec& spec);
Diagram triangle(std::int64_t d);

// Throws NegativeCoordinate if any point leaves N^2.
Diagram translate(const Diagram& d, std::pair<std::int64_t, std::int64_t> v);

// Translation vector v with d1 = d2 + v, when one exists.
std::optional<std::pair<std::int64_t, std::int64_t>> equivalent(const Diagram& d1,
                                                                const Diagram& d2);

// (D1, D2) = ({F<0}, {F>0}); throws PointOnCutLine if F vanishes on a point.
std::pair<Diagram, Diagram> split(const Diagram& d, const AffineCut& f);

// Column notation when the diagram is a union of contiguous columns.
std::optional<ColumnSpec> as_columns(const Diagram& d);

} // namespace fatpoints

#endif
