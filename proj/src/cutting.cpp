#include "fatpoints/cutting.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "fatpoints/errors.hpp"
#include "fatpoints/textio.hpp"

namespace fatpoints {

namespace {

// a*x + b*y - c + 1/2, the only cut shapes the proofs use
AffineCut half_cut(std::int64_t a, std::int64_t b, std::int64_t c) {
    return AffineCut(Rational(a), Rational(b), Rational(1 - 2 * c, 2));
}

MultiplicityList mults_of(std::int64_t m, std::int64_t count) {
    return MultiplicityList(std::vector<std::int64_t>(static_cast<std::size_t>(count), m));
}

std::vector<std::size_t> tail_indices(std::size_t total, std::size_t count) {
    std::vector<std::size_t> idx(count);
    for (std::size_t i = 0; i < count; ++i) idx[i] = total - count + i;
    return idx;
}

} // namespace

std::pair<LinearSystem, LinearSystem> apply_cut(const LinearSystem& L, const AffineCut& f,
                                                const std::vector<std::size_t>& mult_split) {
    auto [d1, d2] = split(L.diagram, f);
    std::vector<bool> selected(L.mults.count(), false);
    for (auto i : mult_split) {
        if (i >= L.mults.count() || selected[i])
            throw Error(ErrorCode::Invalid, "mult_split index out of range or repeated");
        selected[i] = true;
    }
    std::vector<std::int64_t> m2, m1;
    for (std::size_t i = 0; i < L.mults.count(); ++i)
        (selected[i] ? m2 : m1).push_back(L.mults.entries()[i]);
    LinearSystem L2{d2, MultiplicityList(std::move(m2))};
    LinearSystem L1{std::move(d1), MultiplicityList(std::move(m1))};
    if (L2.vdim() != -1)
        throw Error(ErrorCode::VdimMismatch,
                    "D2 has " + std::to_string(L2.diagram.size()) + " points but the assigned " +
                        "multiplicities impose " + std::to_string(L2.mults.conditions()) +
                        " conditions");
    return {std::move(L1), std::move(L2)};
}

namespace {

struct VerifyCtx {
    const VerifyConfig& config;
    ProofReport report;

    bool fail(const std::string& path, const std::string& why) {
        if (report.failure_path.empty()) report.failure_path = path + ": " + why;
        return false;
    }

    bool check(const CutCertificate& cert, const std::string& path, std::size_t depth) {
        report.node_count++;
        report.max_depth = std::max(report.max_depth, depth);
        return std::visit(
            [&](const auto& n) -> bool {
                using T = std::decay_t<decltype(n)>;
                try {
                    if constexpr (std::is_same_v<T, EmptyLeaf>) {
                        report.empty_leaves++;
                        if (!n.system.mults.empty())
                            return fail(path, "empty leaf with nonempty multiplicity list");
                        return true;
                    } else if constexpr (std::is_same_v<T, RankLeaf>) {
                        report.rank_leaves++;
                        if (n.strategy == LeafStrategy::OneMult) {
                            if (n.system.mults.count() != 1)
                                return fail(path, "OneMult leaf needs exactly one multiplicity");
                            std::int64_t m = n.system.mults.entries()[0];
                            if (!onemult_check(n.system.diagram, m))
                                return fail(path, "diagram lies on a curve of degree " +
                                                      std::to_string(m - 1));
                            return true;
                        }
                        auto res = generic_dimension(n.system, n.trials, n.seed,
                                                     config.field_prime);
                        if (res.certainty != Certainty::CertifiedNonSpecial)
                            return fail(path, "modular rank did not certify non-speciality "
                                              "(value " + std::to_string(res.value) +
                                              ", edim " + std::to_string(res.edim) + ")");
                        return true;
                    } else if constexpr (std::is_same_v<T, EquivLeaf>) {
                        report.equiv_leaves++;
                        Diagram moved = translate(n.system.diagram, n.translation);
                        if (moved != n.inner->system().diagram)
                            return fail(path, "translation does not map the diagram onto the "
                                              "inner diagram");
                        if (!(n.system.mults == n.inner->system().mults))
                            return fail(path, "multiplicities differ across equivalence");
                        return check(*n.inner, path + "/equiv", depth);
                    } else if constexpr (std::is_same_v<T, CutNode>) {
                        report.cut_nodes++;
                        auto [L1, L2] = apply_cut(n.system, n.cut, n.mult_split);
                        if (!(n.sub2->system() == L2))
                            return fail(path, "sub2 system does not match the cut result");
                        if (!(n.sub1->system() == L1))
                            return fail(path, "sub1 system does not match the cut result");
                        return check(*n.sub2, path + "/sub2", depth + 1) &&
                               check(*n.sub1, path + "/sub1", depth + 1);
                    } else { // LemmaLeaf
                        report.lemma_leaves++;
                        CertPtr expanded = lemma_expand(n.name, n.params);
                        return check(*expanded, path + "/" + n.name, depth);
                    }
                } catch (const Error& e) {
                    return fail(path, e.what());
                }
            },
            cert.node);
    }
};

} // namespace

ProofReport verify(const CutCertificate& cert, const VerifyConfig& config) {
    VerifyCtx ctx{config, {}};
    bool ok = false;
    try {
        ok = ctx.check(cert, "root", 0);
        if (ok) ctx.report.concluded_dim = cert.system().edim();
    } catch (const Error& e) {
        ctx.fail("root", e.what());
    }
    ctx.report.verified = ok;
    return ctx.report;
}

CertPtr lemma_backtriangle(std::int64_t m) {
    if (m < 1) throw Error(ErrorCode::Invalid, "backtriangle needs m >= 1");
    ColumnSpec spec;
    for (std::int64_t i = 1; i <= m; ++i) spec.columns.push_back({i, m - i});
    return make_cert(CutCertificate{
        RankLeaf{{make_columns(spec), mults_of(m, 1)}, LeafStrategy::OneMult}});
}

namespace {

// (m^0, (m-1)^0, ..., 1^0), the reversed staircase of the remark
CertPtr reversed_staircase(std::int64_t m) {
    ColumnSpec spec;
    for (std::int64_t i = 0; i < m; ++i) spec.columns.push_back({m - i, 0});
    return make_cert(CutCertificate{
        RankLeaf{{make_columns(spec), mults_of(m, 1)}, LeafStrategy::OneMult}});
}

} // namespace

CertPtr lemma_twotriangles(std::int64_t m) {
    if (m < 1) throw Error(ErrorCode::Invalid, "twotriangles needs m >= 1");
    ColumnSpec spec;
    for (std::int64_t i = 0; i <= m; ++i) spec.columns.push_back({m, m - i});
    LinearSystem L{make_columns(spec), mults_of(m, 2)};
    AffineCut cut = half_cut(0, 1, m); // y - m + 1/2
    auto [L1, L2] = apply_cut(L, cut, {1});
    CertPtr sub2 = make_cert(CutCertificate{
        EquivLeaf{L2, {0, -m}, reversed_staircase(m)}});
    CertPtr sub1 = make_cert(CutCertificate{
        EquivLeaf{L1, {-1, 0}, lemma_backtriangle(m)}});
    return make_cert(CutCertificate{CutNode{std::move(L), cut, {1}, sub2, sub1}});
}

CertPtr lemma_singlelayer(std::int64_t m, std::int64_t k) {
    if (m < 1 || k < 1 || k % (m + 1) != 0)
        throw Error(ErrorCode::DivisibilityViolation, "singlelayer needs (m+1) | k");
    if (k == m + 1) return lemma_twotriangles(m);
    ColumnSpec spec;
    for (std::int64_t i = 0; i < k; ++i) spec.columns.push_back({m, k - 1 - i});
    LinearSystem L{make_columns(spec), mults_of(m, 2 * k / (m + 1))};
    AffineCut cut = half_cut(1, 0, m + 1); // x - (m+1) + 1/2
    auto split_idx = tail_indices(L.mults.count(), static_cast<std::size_t>(2 * (k - m - 1) / (m + 1)));
    auto [L1, L2] = apply_cut(L, cut, split_idx);
    CertPtr sub2 = make_cert(CutCertificate{
        EquivLeaf{L2, {-(m + 1), 0}, lemma_singlelayer(m, k - m - 1)}});
    CertPtr sub1 = make_cert(CutCertificate{
        EquivLeaf{L1, {0, -(k - 1 - m)}, lemma_twotriangles(m)}});
    return make_cert(CutCertificate{CutNode{std::move(L), cut, split_idx, sub2, sub1}});
}

CertPtr lemma_fatlayer(std::int64_t m, std::int64_t k, std::int64_t h) {
    if (m < 1 || k < 1 || h < 1 || k % (m + 1) != 0 || h % m != 0)
        throw Error(ErrorCode::DivisibilityViolation, "fatlayer needs (m+1)|k and m|h");
    if (h == m) return lemma_singlelayer(m, k);
    ColumnSpec spec;
    for (std::int64_t i = 0; i < k; ++i) spec.columns.push_back({h, k - 1 - i});
    LinearSystem L{make_columns(spec), mults_of(m, 2 * k * h / (m * (m + 1)))};
    AffineCut cut = half_cut(1, 1, k - 1 + m); // y + x - (k-1+m) + 1/2
    auto split_idx =
        tail_indices(L.mults.count(), static_cast<std::size_t>(2 * k * (h - m) / (m * (m + 1))));
    auto [L1, L2] = apply_cut(L, cut, split_idx);
    CertPtr sub2 = make_cert(CutCertificate{
        EquivLeaf{L2, {0, -m}, lemma_fatlayer(m, k, h - m)}});
    // D1 is exactly the singlelayer diagram, offsets included
    CertPtr sub1 = lemma_singlelayer(m, k);
    return make_cert(CutCertificate{CutNode{std::move(L), cut, split_idx, sub2, sub1}});
}

namespace {

Diagram eols_diagram(std::int64_t m, std::int64_t k) {
    std::int64_t h = m * (m + 1);
    ColumnSpec spec;
    for (std::int64_t i = 0; i < k; ++i) spec.columns.push_back({h, k - 1 - i});
    for (std::int64_t a = h - 1; a >= 1; --a) spec.columns.push_back({a, 0});
    return make_columns(spec);
}

} // namespace

std::vector<LinearSystem> eols(std::int64_t m) {
    if (m < 1) throw Error(ErrorCode::Invalid, "eols needs m >= 1");
    std::int64_t h = m * (m + 1);
    std::vector<LinearSystem> out;
    for (std::int64_t k = 1; k <= m + 1; ++k)
        out.push_back({eols_diagram(m, k), mults_of(m, 2 * k + h - 1)});
    return out;
}

std::map<std::int64_t, CertPtr> eols_certificates(std::int64_t m, std::uint64_t seed,
                                                  int trials) {
    std::map<std::int64_t, CertPtr> out;
    auto systems = eols(m);
    for (std::int64_t k = 1; k <= m + 1; ++k)
        out[k] = make_cert(CutCertificate{RankLeaf{systems[static_cast<std::size_t>(k - 1)],
                                                   LeafStrategy::ModularRank, seed, trials}});
    return out;
}

CertPtr lemma_fulllayer(std::int64_t m, std::int64_t k,
                        const std::map<std::int64_t, CertPtr>& eols_certs) {
    if (m < 1 || k < 1) throw Error(ErrorCode::Invalid, "fulllayer needs m, k >= 1");
    std::int64_t h = m * (m + 1);
    std::int64_t k2 = (k - 1) % (m + 1) + 1;
    std::int64_t k1 = (k - k2) / (m + 1);
    auto it = eols_certs.find(k2);
    if (it == eols_certs.end())
        throw Error(ErrorCode::MissingEoLSCertificate,
                    "no certificate supplied for the EoLS member k = " + std::to_string(k2));
    LinearSystem eols_sys{eols_diagram(m, k2), mults_of(m, 2 * k2 + h - 1)};
    if (!(it->second->system() == eols_sys))
        throw Error(ErrorCode::Invalid, "supplied certificate is not for the EoLS member k = " +
                                            std::to_string(k2));
    if (k1 == 0) return it->second;

    ColumnSpec spec;
    for (std::int64_t i = 0; i < k; ++i) spec.columns.push_back({h, k - 1 - i});
    for (std::int64_t a = h - 1; a >= 1; --a) spec.columns.push_back({a, 0});
    LinearSystem L{make_columns(spec), mults_of(m, 2 * k + h - 1)};
    AffineCut cut = half_cut(1, 0, k1 * (m + 1)); // x - k1(m+1) + 1/2
    auto split_idx = tail_indices(L.mults.count(), static_cast<std::size_t>(2 * k2 + h - 1));
    auto [L1, L2] = apply_cut(L, cut, split_idx);
    CertPtr sub2 = make_cert(CutCertificate{EquivLeaf{L2, {-k1 * (m + 1), 0}, it->second}});
    CertPtr sub1 = make_cert(CutCertificate{
        EquivLeaf{L1, {0, -k2}, lemma_fatlayer(m, k - k2, h)}});
    return make_cert(CutCertificate{CutNode{std::move(L), cut, split_idx, sub2, sub1}});
}

std::int64_t finitely_slab_mults(std::int64_t m, std::int64_t d) {
    return 2 * d - m * (m + 1) + 3;
}

CertPtr theorem_finitely_step(std::int64_t m, std::int64_t d, std::int64_t p, CertPtr base,
                              const std::map<std::int64_t, CertPtr>& eols_certs) {
    std::int64_t h = m * (m + 1);
    if (d <= h) throw Error(ErrorCode::BaseMissing, "need d > m(m+1) for an induction step");
    std::int64_t p2 = finitely_slab_mults(m, d);
    if (p < p2)
        throw Error(ErrorCode::Invalid, "induction step needs at least " + std::to_string(p2) +
                                            " multiplicities");
    LinearSystem base_sys = plane_system(d - h, mults_of(m, p - p2));
    if (!base || !(base->system() == base_sys))
        throw Error(ErrorCode::BaseMissing, "base certificate is not for L_" +
                                                std::to_string(d - h) + "(" + std::to_string(m) +
                                                "^x" + std::to_string(p - p2) + ")");
    LinearSystem L = plane_system(d, mults_of(m, p));
    AffineCut cut = half_cut(1, 1, d - h + 1); // y + x - (d-h+1) + 1/2
    auto split_idx = tail_indices(L.mults.count(), static_cast<std::size_t>(p2));
    auto [L1, L2] = apply_cut(L, cut, split_idx);
    CertPtr sub2 = lemma_fulllayer(m, d - h + 2, eols_certs);
    if (!(sub2->system() == L2))
        throw Error(ErrorCode::Invalid, "fulllayer slab does not match the cut");
    return make_cert(CutCertificate{CutNode{std::move(L), cut, split_idx, sub2, base}});
}

CertPtr lemma_expand(const std::string& name, const std::vector<std::int64_t>& params) {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw Error(ErrorCode::Invalid, "lemma \"" + name + "\" takes " + std::to_string(n) +
                                                " parameter(s)");
    };
    if (name == "backtriangle") {
        need(1);
        return lemma_backtriangle(params[0]);
    }
    if (name == "twotriangles") {
        need(1);
        return lemma_twotriangles(params[0]);
    }
    if (name == "singlelayer") {
        need(2);
        return lemma_singlelayer(params[0], params[1]);
    }
    if (name == "fatlayer") {
        need(3);
        return lemma_fatlayer(params[0], params[1], params[2]);
    }
    if (name == "fulllayer") {
        need(2);
        return lemma_fulllayer(params[0], params[1], eols_certificates(params[0]));
    }
    throw Error(ErrorCode::Invalid, "unknown lemma \"" + name + "\"");
}

namespace {

struct Searcher {
    const SearchConfig& cfg;
    // canonical (diagram, sorted mults) -> largest depth budget that failed
    std::unordered_map<std::string, int> failed;

    std::string key(const LinearSystem& L) {
        Diagram d = L.diagram;
        if (!d.empty()) {
            std::int64_t mx = d.points().front().x, my = d.points().front().y;
            for (const auto& p : d) {
                mx = std::min(mx, p.x);
                my = std::min(my, p.y);
            }
            d = translate(d, {-mx, -my});
        }
        auto ms = L.mults.entries();
        std::sort(ms.begin(), ms.end(), std::greater<>());
        return format_diagram(d) + "|" + format_mults(MultiplicityList(std::move(ms)));
    }

    std::unordered_map<std::string, bool> rank_cache; // canonical key -> certified

    std::optional<CertPtr> rank_close(const LinearSystem& L) {
        std::string k = key(L);
        auto it = rank_cache.find(k);
        bool ok;
        if (it != rank_cache.end()) {
            ok = it->second;
        } else {
            auto res = generic_dimension(L, cfg.trials, cfg.seed, cfg.field_prime);
            ok = res.certainty == Certainty::CertifiedNonSpecial;
            rank_cache[k] = ok;
        }
        if (!ok) return std::nullopt;
        return make_cert(CutCertificate{
            RankLeaf{L, LeafStrategy::ModularRank, cfg.seed, cfg.trials}});
    }

    // enumerate index sets with condition sum == target, largest mults first
    bool for_each_split(const MultiplicityList& mults, std::int64_t target,
                        const std::function<bool(const std::vector<std::size_t>&)>& fn) {
        // group equal multiplicities, descending
        struct Group {
            std::int64_t m, cond;
            std::vector<std::size_t> indices;
        };
        std::map<std::int64_t, std::vector<std::size_t>, std::greater<>> by_m;
        for (std::size_t i = 0; i < mults.count(); ++i)
            by_m[mults.entries()[i]].push_back(i);
        std::vector<Group> groups;
        for (auto& [m, idx] : by_m) groups.push_back({m, m * (m + 1) / 2, std::move(idx)});

        std::vector<std::size_t> chosen;
        std::function<bool(std::size_t, std::int64_t)> rec = [&](std::size_t g,
                                                                 std::int64_t rest) -> bool {
            if (rest == 0) {
                auto sel = chosen;
                std::sort(sel.begin(), sel.end());
                return fn(sel);
            }
            if (g == groups.size()) return false;
            std::int64_t max_take =
                std::min<std::int64_t>(static_cast<std::int64_t>(groups[g].indices.size()),
                                       rest / groups[g].cond);
            for (std::int64_t take = max_take; take >= 0; --take) {
                for (std::int64_t i = 0; i < take; ++i)
                    chosen.push_back(groups[g].indices[static_cast<std::size_t>(i)]);
                if (rec(g + 1, rest - take * groups[g].cond)) return true;
                chosen.resize(chosen.size() - static_cast<std::size_t>(take));
            }
            return false;
        };
        return rec(0, target);
    }

    // close a subsystem without cutting it: empty leaf or a certified rank
    // leaf at any size (the certificate checker recomputes the rank anyway)
    std::optional<CertPtr> close_flat(const LinearSystem& L) {
        if (L.mults.empty()) return make_cert(CutCertificate{EmptyLeaf{L}});
        return rank_close(L);
    }

    std::optional<CertPtr> search(const LinearSystem& L, int budget) {
        if (L.mults.empty())
            return make_cert(CutCertificate{EmptyLeaf{L}});
        if (L.diagram.size() <= cfg.rank_threshold) {
            if (auto leaf = rank_close(L)) return leaf;
        }
        if (budget <= 0) {
            // last resort for a large subsystem: a single rank leaf
            if (L.diagram.size() > cfg.rank_threshold) return rank_close(L);
            return std::nullopt;
        }
        std::string k = key(L);
        if (auto it = failed.find(k); it != failed.end() && budget <= it->second)
            return std::nullopt;

        std::int64_t max_x = 0, max_y = 0, max_s = 0;
        for (const auto& p : L.diagram) {
            max_x = std::max(max_x, p.x);
            max_y = std::max(max_y, p.y);
            max_s = std::max(max_s, p.x + p.y);
        }
        struct Family {
            std::int64_t a, b, cmax;
        };
        const Family families[] = {{1, 0, max_x}, {0, 1, max_y}, {1, 1, max_s}};

        std::optional<CertPtr> found;
        // peel phase: accept only candidates whose D2 side closes without
        // further cuts, so each level strips one certified piece
        for (const auto& fam : families) {
            for (std::int64_t c = fam.cmax - 1; c >= 0 && !found; --c) {
                AffineCut cut = half_cut(fam.a, fam.b, c);
                auto [d1, d2] = split(L.diagram, cut);
                if (d2.empty() || d1.empty()) continue;
                std::int64_t target = static_cast<std::int64_t>(d2.size());
                for_each_split(L.mults, target, [&](const std::vector<std::size_t>& sel) {
                    auto [L1, L2] = apply_cut(L, cut, sel);
                    auto sub2 = close_flat(L2);
                    if (!sub2) return false;
                    auto sub1 = search(L1, budget - 1);
                    if (!sub1) return false;
                    found = make_cert(CutCertificate{CutNode{L, cut, sel, *sub2, *sub1}});
                    return true;
                });
                if (found) return found;
            }
            if (found) break;
        }
        // full phase: let the D2 side grow its own cut subtree
        for (const auto& fam : families) {
            for (std::int64_t c = fam.cmax - 1; c >= 0 && !found; --c) {
                AffineCut cut = half_cut(fam.a, fam.b, c);
                auto [d1, d2] = split(L.diagram, cut);
                if (d2.empty() || d1.empty()) continue;
                std::int64_t target = static_cast<std::int64_t>(d2.size());
                for_each_split(L.mults, target, [&](const std::vector<std::size_t>& sel) {
                    auto [L1, L2] = apply_cut(L, cut, sel);
                    auto sub2 = search(L2, budget - 1);
                    if (!sub2) return false;
                    auto sub1 = search(L1, budget - 1);
                    if (!sub1) return false;
                    found = make_cert(CutCertificate{CutNode{L, cut, sel, *sub2, *sub1}});
                    return true;
                });
                if (found) return found;
            }
            if (found) break;
        }
        if (!found) {
            auto it = failed.find(k);
            if (it == failed.end() || it->second < budget) failed[k] = budget;
        }
        return found;
    }
};

} // namespace

std::optional<CertPtr> search_cut_proof(const LinearSystem& L, const SearchConfig& config) {
    Searcher s{config, {}};
    return s.search(L, config.max_depth);
}

} // namespace fatpoints
