#include "fatpoints/interp.hpp"

#include <random>

#include "fatpoints/errors.hpp"

namespace fatpoints {

MultiplicityList::MultiplicityList(std::vector<std::int64_t> entries)
    : entries_(std::move(entries)) {
    for (auto m : entries_)
        if (m < 1) throw Error(ErrorCode::Invalid, "multiplicity must be >= 1");
}

std::int64_t MultiplicityList::conditions() const {
    std::int64_t c = 0;
    for (auto m : entries_) c += m * (m + 1) / 2;
    return c;
}

LinearSystem plane_system(std::int64_t d, MultiplicityList mults) {
    return {triangle(d), std::move(mults)};
}

std::int64_t falling_factorial(std::int64_t a, std::int64_t b) {
    std::int64_t r = 1;
    for (std::int64_t k = 1; k <= b; ++k) r *= a - k + 1;
    return b > a ? 0 : r;
}

std::vector<ConditionIndex> condition_rows(const MultiplicityList& mults) {
    std::vector<ConditionIndex> rows;
    for (std::size_t j = 0; j < mults.count(); ++j) {
        std::int64_t m = mults.entries()[j];
        for (std::int64_t bx = 0; bx < m; ++bx)
            for (std::int64_t by = 0; bx + by < m; ++by) rows.push_back({j, {bx, by}});
    }
    return rows;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

// falling factorial reduced mod p; nonzero iff the integer value is nonzero
// as long as p > a (every factor is in [1, a])
std::uint64_t falling_factorial_mod(std::int64_t a, std::int64_t b, std::uint64_t p) {
    if (b > a) return 0;
    std::uint64_t r = 1;
    for (std::int64_t k = 1; k <= b; ++k) r = mulmod(r, static_cast<std::uint64_t>(a - k + 1), p);
    return r;
}

} // namespace

InterpMatrixFp build_matrix_fp(const LinearSystem& L,
                               const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points,
                               std::uint64_t p) {
    if (points.size() != L.mults.count())
        throw Error(ErrorCode::Invalid, "point count does not match multiplicity count");
    std::int64_t max_coord = 0;
    for (const auto& a : L.diagram) max_coord = std::max({max_coord, a.x, a.y});
    if (static_cast<std::uint64_t>(max_coord) >= p)
        throw Error(ErrorCode::PrimeTooSmall,
                    "prime must exceed the largest diagram coordinate");
    for (const auto& pt : points)
        if (pt.first % p == 0 || pt.second % p == 0)
            throw Error(ErrorCode::ZeroCoordinate, "evaluation point has a zero coordinate");

    InterpMatrixFp M;
    M.rows = condition_rows(L.mults);
    M.cols = L.diagram.points();
    M.point_values = points;
    M.modulus = p;
    M.entries.assign(M.rows.size(), std::vector<std::uint64_t>(M.cols.size(), 0));
    for (std::size_t i = 0; i < M.rows.size(); ++i) {
        const auto& [j, beta] = M.rows[i];
        std::uint64_t px = points[j].first % p, py = points[j].second % p;
        for (std::size_t k = 0; k < M.cols.size(); ++k) {
            const auto& alpha = M.cols[k];
            if (alpha.x < beta.x || alpha.y < beta.y) continue;
            std::uint64_t c = mulmod(falling_factorial_mod(alpha.x, beta.x, p),
                                     falling_factorial_mod(alpha.y, beta.y, p), p);
            c = mulmod(c, powmod(px, static_cast<std::uint64_t>(alpha.x - beta.x), p), p);
            c = mulmod(c, powmod(py, static_cast<std::uint64_t>(alpha.y - beta.y), p), p);
            M.entries[i][k] = c;
        }
    }
    return M;
}

InterpMatrixExact build_matrix_exact(
    const LinearSystem& L, const std::vector<std::pair<std::int64_t, std::int64_t>>& points) {
    if (points.size() != L.mults.count())
        throw Error(ErrorCode::Invalid, "point count does not match multiplicity count");
    for (const auto& pt : points)
        if (pt.first == 0 || pt.second == 0)
            throw Error(ErrorCode::ZeroCoordinate, "evaluation point has a zero coordinate");

    InterpMatrixExact M;
    M.rows = condition_rows(L.mults);
    M.cols = L.diagram.points();
    M.point_values = points;
    M.entries.assign(M.rows.size(), std::vector<BigInt>(M.cols.size(), 0));
    for (std::size_t i = 0; i < M.rows.size(); ++i) {
        const auto& [j, beta] = M.rows[i];
        BigInt px = points[j].first, py = points[j].second;
        for (std::size_t k = 0; k < M.cols.size(); ++k) {
            const auto& alpha = M.cols[k];
            if (alpha.x < beta.x || alpha.y < beta.y) continue;
            BigInt c = BigInt(falling_factorial(alpha.x, beta.x)) *
                       falling_factorial(alpha.y, beta.y);
            c *= boost::multiprecision::pow(px, static_cast<unsigned>(alpha.x - beta.x));
            c *= boost::multiprecision::pow(py, static_cast<unsigned>(alpha.y - beta.y));
            M.entries[i][k] = c;
        }
    }
    return M;
}

std::size_t rank_fp(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        std::uint64_t inv = invmod(m[r][c] % p, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            std::uint64_t f = mulmod(m[i][c] % p, inv, p);
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = (m[i][j] + p - mulmod(f, m[r][j] % p, p)) % p;
        }
        ++r;
    }
    return r;
}

std::size_t rank_exact(std::vector<std::vector<BigInt>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

DimensionResult generic_dimension(const LinearSystem& L, int trials, std::uint64_t seed,
                                  std::uint64_t p) {
    if (trials < 1) throw Error(ErrorCode::Invalid, "trials must be >= 1");
    DimensionResult res;
    res.vdim = L.vdim();
    res.edim = L.edim();
    res.modulus = p;
    res.seed = seed;
    std::int64_t n = static_cast<std::int64_t>(L.diagram.size());
    std::int64_t best = n - 1; // rank 0
    for (int t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
        std::mt19937_64 rng(trial_seed);
        std::uniform_int_distribution<std::uint64_t> coord(1, p - 1);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
        pts.reserve(L.mults.count());
        for (std::size_t j = 0; j < L.mults.count(); ++j) {
            std::uint64_t x = coord(rng), y = coord(rng);
            pts.emplace_back(x, y);
        }
        auto M = build_matrix_fp(L, pts, p);
        std::size_t rank = rank_fp(M.entries, p);
        std::int64_t value = n - static_cast<std::int64_t>(rank) - 1;
        res.trials.push_back({trial_seed, rank, value});
        best = std::min(best, value);
        if (best == res.edim) break; // certified, no point in more trials
    }
    res.value = best;
    if (best == res.edim) {
        res.certainty = Certainty::CertifiedNonSpecial;
    } else {
        res.certainty = Certainty::ProbablySpecial;
        double deg = 0;
        for (const auto& a : L.diagram) deg += static_cast<double>(a.x + a.y);
        double per_trial = deg / static_cast<double>(p);
        res.error_bound = 1;
        for (std::size_t i = 0; i < res.trials.size(); ++i) res.error_bound *= per_trial;
    }
    return res;
}

DimensionResult exact_dimension(const LinearSystem& L,
                                const std::vector<std::pair<std::int64_t, std::int64_t>>& points,
                                std::int64_t cap) {
    if (static_cast<std::int64_t>(L.diagram.size()) > cap)
        throw Error(ErrorCode::CapExceeded, "diagram exceeds the exact-size cap of " +
                                                std::to_string(cap) + " columns");
    auto M = build_matrix_exact(L, points);
    std::size_t rank = rank_exact(M.entries);
    DimensionResult res;
    res.vdim = L.vdim();
    res.edim = L.edim();
    res.value = static_cast<std::int64_t>(L.diagram.size()) - static_cast<std::int64_t>(rank) - 1;
    res.certainty = Certainty::ExactRational;
    return res;
}

bool onemult_check(const Diagram& d, std::int64_t m) {
    std::int64_t need = m * (m + 1) / 2;
    if (static_cast<std::int64_t>(d.size()) != need)
        throw Error(ErrorCode::CardinalityMismatch,
                    "diagram has " + std::to_string(d.size()) + " points, expected " +
                        std::to_string(need));
    // rows: beta with |beta| < m; entry x^bx * y^by, 0^0 = 1
    std::vector<std::vector<BigInt>> mat;
    for (std::int64_t bx = 0; bx < m; ++bx) {
        for (std::int64_t by = 0; bx + by < m; ++by) {
            std::vector<BigInt> row;
            row.reserve(d.size());
            for (const auto& p : d) {
                BigInt v = boost::multiprecision::pow(BigInt(p.x), static_cast<unsigned>(bx));
                v *= boost::multiprecision::pow(BigInt(p.y), static_cast<unsigned>(by));
                row.push_back(v);
            }
            mat.push_back(std::move(row));
        }
    }
    return rank_exact(std::move(mat)) == static_cast<std::size_t>(need);
}

std::string certainty_name(Certainty c) {
    switch (c) {
        case Certainty::CertifiedNonSpecial: return "CertifiedNonSpecial";
        case Certainty::ProbablySpecial: return "ProbablySpecial";
        case Certainty::ExactRational: return "ExactRational";
    }
    return "?";
}

} // namespace fatpoints
