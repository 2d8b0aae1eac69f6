#include "fatpoints/negcurve.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "fatpoints/errors.hpp"

namespace fatpoints {

DivisorClass DivisorClass::normalized() const {
    DivisorClass out{d, mults};
    while (!out.mults.empty() && out.mults.back() == 0) out.mults.pop_back();
    return out;
}

std::string DivisorClass::str() const {
    std::ostringstream out;
    out << '(' << d << ';';
    auto n = normalized();
    for (std::size_t i = 0; i < n.mults.size(); ++i) {
        if (i) out << ',';
        out << n.mults[i];
    }
    out << ')';
    return out.str();
}

std::int64_t pairing(const DivisorClass& a, const DivisorClass& b) {
    std::int64_t v = a.d * b.d;
    std::size_t n = std::min(a.mults.size(), b.mults.size());
    for (std::size_t i = 0; i < n; ++i) v -= a.mults[i] * b.mults[i];
    return v;
}

namespace {

// positions of the three largest multiplicities; ties broken by original
// index, which keeps traces reproducible
std::array<std::size_t, 3> top_three(const std::vector<std::int64_t>& m) {
    std::vector<std::size_t> idx(m.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return m[a] > m[b]; });
    return {idx[0], idx[1], idx[2]};
}

void apply_move(DivisorClass& c, const CremonaMove& mv) {
    std::int64_t t = c.d - c.mults[mv.i] - c.mults[mv.j] - c.mults[mv.k];
    c.d += t;
    c.mults[mv.i] += t;
    c.mults[mv.j] += t;
    c.mults[mv.k] += t;
}

} // namespace

CremonaTrace cremona_reduce(const DivisorClass& c) {
    CremonaTrace trace;
    trace.result = c;
    while (trace.result.mults.size() < 3) trace.result.mults.push_back(0);
    while (trace.result.d >= 0) {
        auto [i, j, k] = top_three(trace.result.mults);
        if (trace.result.mults[i] + trace.result.mults[j] + trace.result.mults[k] <=
            trace.result.d)
            break;
        CremonaMove mv{i, j, k};
        apply_move(trace.result, mv); // strictly decreases d
        trace.moves.push_back(mv);
    }
    return trace;
}

bool is_minus_one_class(const DivisorClass& c) {
    if (pairing(c, c) != -1) return false;
    std::int64_t anti = 3 * c.d;
    for (auto m : c.mults) anti -= m;
    if (anti != 1) return false;
    auto red = cremona_reduce(c).result.normalized();
    if (red.d != 0) return false;
    int minus_ones = 0;
    for (auto m : red.mults) {
        if (m == -1)
            ++minus_ones;
        else if (m != 0)
            return false;
    }
    return minus_ones == 1;
}

namespace {

// place template coefficients on the largest system multiplicities
std::optional<Witness> try_template(const DivisorClass& sys, std::int64_t deg,
                                    const std::vector<std::int64_t>& coeffs,
                                    const std::string& name) {
    if (sys.mults.size() < coeffs.size()) return std::nullopt;
    std::vector<std::size_t> idx(sys.mults.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return sys.mults[a] > sys.mults[b]; });
    DivisorClass cand{deg, std::vector<std::int64_t>(sys.mults.size(), 0)};
    for (std::size_t i = 0; i < coeffs.size(); ++i) cand.mults[idx[i]] = coeffs[i];
    std::int64_t pv = pairing(sys, cand);
    if (pv > -2) return std::nullopt;
    if (!is_minus_one_class(cand)) return std::nullopt;
    return Witness{cand, pv, name};
}

} // namespace

std::optional<Witness> find_witness(const LinearSystem& L) {
    std::int64_t deg = 0;
    for (const auto& p : L.diagram) deg = std::max(deg, p.x + p.y);
    if (L.diagram != triangle(deg))
        throw Error(ErrorCode::NotProjectivePlaneSystem,
                    "the (-1)-curve criterion applies to full triangle diagrams only");
    DivisorClass sys{deg, L.mults.entries()};

    struct Template {
        std::int64_t deg;
        std::vector<std::int64_t> coeffs;
        const char* name;
    };
    static const Template templates[] = {
        {1, {1, 1}, "line"},
        {2, {1, 1, 1, 1, 1}, "conic"},
        {3, {2, 1, 1, 1, 1, 1, 1}, "cubic"},
        {4, {2, 2, 2, 1, 1, 1, 1, 1}, "quartic"},
        {5, {2, 2, 2, 2, 2, 2, 1, 1}, "quintic"},
        {6, {3, 2, 2, 2, 2, 2, 2, 2}, "sextic"},
    };
    for (const auto& t : templates)
        if (auto w = try_template(sys, t.deg, t.coeffs, t.name)) return w;

    // multiplicities <= -2 along the system's own Cremona trace expose
    // witnesses: pull the exceptional class back through the moves
    DivisorClass cur = sys;
    while (cur.mults.size() < 3) cur.mults.push_back(0);
    std::vector<CremonaMove> moves;
    while (cur.d >= 0) {
        for (std::size_t i = 0; i < cur.mults.size(); ++i) {
            if (cur.mults[i] > -2) continue;
            DivisorClass cand{0, std::vector<std::int64_t>(cur.mults.size(), 0)};
            cand.mults[i] = -1;
            for (auto it = moves.rbegin(); it != moves.rend(); ++it) apply_move(cand, *it);
            std::int64_t pv = pairing(sys, cand);
            if (pv <= -2 && is_minus_one_class(cand))
                return Witness{cand, pv,
                               "cremona trace step " + std::to_string(moves.size())};
        }
        auto [i, j, k] = top_three(cur.mults);
        if (cur.mults[i] + cur.mults[j] + cur.mults[k] <= cur.d) break;
        CremonaMove mv{i, j, k};
        apply_move(cur, mv);
        moves.push_back(mv);
    }
    return std::nullopt;
}

} // namespace fatpoints
