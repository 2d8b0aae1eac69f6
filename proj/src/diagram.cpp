#include "fatpoints/diagram.hpp"

#include <algorithm>
#include <map>

#include "fatpoints/errors.hpp"

namespace fatpoints {

Diagram::Diagram(std::vector<LatticePoint> points) : points_(std::move(points)) {
    for (const auto& p : points_) {
        if (p.x < 0 || p.y < 0)
            throw Error(ErrorCode::NegativeCoordinate,
                        "diagram point (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                            ") outside N^2");
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool Diagram::contains(const LatticePoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

AffineCut::AffineCut(Rational a, Rational b, Rational c) : r1(a), r2(b), r0(c) {
    if (r1.num == 0 && r2.num == 0)
        throw Error(ErrorCode::Invalid, "affine cut with r1 = r2 = 0");
}

int AffineCut::sign_at(const LatticePoint& p) const {
    // common denominator, then pure integer arithmetic
    std::int64_t d = r1.den * r2.den * r0.den;
    std::int64_t v = r1.num * (d / r1.den) * p.x + r2.num * (d / r2.den) * p.y +
                     r0.num * (d / r0.den);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

Diagram make_columns(const ColumnSpec& spec) {
    std::vector<LatticePoint> pts;
    for (std::size_t i = 0; i < spec.columns.size(); ++i) {
        const auto& col = spec.columns[i];
        if (col.count < 0 || col.offset < 0)
            throw Error(ErrorCode::Invalid, "column spec with negative count or offset");
        for (std::int64_t j = 0; j < col.count; ++j)
            pts.push_back({static_cast<std::int64_t>(i), col.offset + j});
    }
    return Diagram(std::move(pts));
}

Diagram triangle(std::int64_t d) {
    if (d < 0) throw Error(ErrorCode::Invalid, "triangle degree must be >= 0");
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>((d + 1) * (d + 2) / 2));
    for (std::int64_t x = 0; x <= d; ++x)
        for (std::int64_t y = 0; y + x <= d; ++y) pts.push_back({x, y});
    return Diagram(std::move(pts));
}

Diagram translate(const Diagram& d, std::pair<std::int64_t, std::int64_t> v) {
    std::vector<LatticePoint> pts;
    pts.reserve(d.size());
    for (const auto& p : d) {
        LatticePoint q{p.x + v.first, p.y + v.second};
        if (q.x < 0 || q.y < 0)
            throw Error(ErrorCode::NegativeCoordinate,
                        "translation moves (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                            ") outside N^2");
        pts.push_back(q);
    }
    return Diagram(std::move(pts));
}

std::optional<std::pair<std::int64_t, std::int64_t>> equivalent(const Diagram& d1,
                                                                const Diagram& d2) {
    if (d1.size() != d2.size()) return std::nullopt;
    if (d1.empty()) return std::make_pair(std::int64_t{0}, std::int64_t{0});
    // canonical order makes the minima correspond under any translation
    const auto& a = d1.points().front();
    const auto& b = d2.points().front();
    std::pair<std::int64_t, std::int64_t> v{a.x - b.x, a.y - b.y};
    for (std::size_t i = 0; i < d1.size(); ++i) {
        if (d1.points()[i].x != d2.points()[i].x + v.first ||
            d1.points()[i].y != d2.points()[i].y + v.second)
            return std::nullopt;
    }
    return v;
}

std::pair<Diagram, Diagram> split(const Diagram& d, const AffineCut& f) {
    std::vector<LatticePoint> lo, hi;
    for (const auto& p : d) {
        int s = f.sign_at(p);
        if (s == 0)
            throw Error(ErrorCode::PointOnCutLine, "cut line passes through (" +
                                                       std::to_string(p.x) + "," +
                                                       std::to_string(p.y) + ")");
        (s < 0 ? lo : hi).push_back(p);
    }
    return {Diagram(std::move(lo)), Diagram(std::move(hi))};
}

std::optional<ColumnSpec> as_columns(const Diagram& d) {
    if (d.empty()) return ColumnSpec{};
    std::map<std::int64_t, std::vector<std::int64_t>> cols;
    for (const auto& p : d) cols[p.x].push_back(p.y); // already ascending
    std::int64_t max_x = cols.rbegin()->first;
    ColumnSpec spec;
    for (std::int64_t x = 0; x <= max_x; ++x) {
        auto it = cols.find(x);
        if (it == cols.end()) {
            spec.columns.push_back({0, 0});
            continue;
        }
        const auto& ys = it->second;
        for (std::size_t i = 1; i < ys.size(); ++i)
            if (ys[i] != ys[i - 1] + 1) return std::nullopt; // gap: not contiguous
        spec.columns.push_back({static_cast<std::int64_t>(ys.size()), ys.front()});
    }
    return spec;
}

} // namespace fatpoints
