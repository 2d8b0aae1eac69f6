// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "fatpoints/cutting.hpp"
#include "fatpoints/errors.hpp"
#include "fatpoints/homogeneous.hpp"
#include "fatpoints/interp.hpp"
#include "fatpoints/negcurve.hpp"
#include "fatpoints/textio.hpp"

using namespace fatpoints;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool all_ok = true;

void report(int n, bool ok, const std::string& what) {
    if (!ok) all_ok = false;
    std::printf("criterion %d: %s  %s\n", n, ok ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
}

AffineCut half(std::int64_t a, std::int64_t b, std::int64_t c) {
    return AffineCut(Rational(a), Rational(b), Rational(1 - 2 * c, 2));
}

// serialized artifacts accumulated by earlier criteria, replayed in #8
std::vector<std::string> cert_artifacts;
std::vector<CampaignRecord> campaign_artifacts;

bool roundtrip_ok(const std::string& text) {
    auto back = parse_certificate(text);
    return serialize_certificate(back) == text;
}

// --- 1: L_21(7^6, 6^4, 1) ----------------------------------------------------

bool criterion1(std::string& what) {
    LinearSystem L = plane_system(21, parse_mults("7x6,6x4,1"));
    if (L.diagram.size() != 253) {
        what = "diagram size != 253";
        return false;
    }
    auto t0 = Clock::now();
    auto res = generic_dimension(L, 3, 1);
    double rank_s = seconds_since(t0);
    if (res.value != -1 || res.certainty != Certainty::CertifiedNonSpecial) {
        what = "dim != -1 certified";
        return false;
    }
    if (rank_s >= 2.0) {
        what = "253x253 rank took " + std::to_string(rank_s) + " s";
        return false;
    }
    SearchConfig cfg;
    cfg.max_depth = 6;
    t0 = Clock::now();
    auto cert = search_cut_proof(L, cfg);
    double prove_s = seconds_since(t0);
    if (!cert) {
        what = "prove found no certificate at depth <= 6";
        return false;
    }
    auto rep = verify(**cert);
    if (!rep.verified || rep.concluded_dim != -1 || rep.max_depth > 6) {
        what = "certificate failed verification: " + rep.failure_path;
        return false;
    }
    cert_artifacts.push_back(serialize_certificate(**cert));
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "dim(L_21(7^6,6^4,1)) = -1 certified; rank %.2f s; prove %.2f s, "
                  "%zu nodes, depth %zu; verify accepts",
                  rank_s, prove_s, rep.node_count, rep.max_depth);
    what = buf;
    return true;
}

// --- 2: lemma ladder ---------------------------------------------------------

bool check_lemma(const CertPtr& cert, std::size_t& count, std::string& what) {
    const LinearSystem& root = cert->system();
    if (root.diagram.size() > 400) return true; // outside the gate's size window
    auto rep = verify(*cert);
    if (!rep.verified) {
        what = "lemma certificate failed: " + rep.failure_path;
        return false;
    }
    auto res = generic_dimension(root, 3, 11);
    if (res.value != -1 || res.certainty != Certainty::CertifiedNonSpecial) {
        what = "rank oracle disagrees on " + format_mults(root.mults) + " over " +
               format_diagram(root.diagram);
        return false;
    }
    cert_artifacts.push_back(serialize_certificate(*cert));
    ++count;
    return true;
}

bool criterion2(std::string& what) {
    auto t0 = Clock::now();
    std::size_t count = 0;
    for (std::int64_t m = 1; m <= 5; ++m) {
        if (!check_lemma(lemma_backtriangle(m), count, what)) return false;
        if (!check_lemma(lemma_twotriangles(m), count, what)) return false;
        for (std::int64_t k = m + 1; k * (m + 1) <= 400; k += m + 1)
            if (!check_lemma(lemma_singlelayer(m, k), count, what)) return false;
        for (std::int64_t k = m + 1; k * (m + 1) <= 400; k += m + 1)
            for (std::int64_t h = m; k * h + h * (h - 1) / 2 <= 400; h += m)
                if (!check_lemma(lemma_fatlayer(m, k, h), count, what)) return false;
        auto certs = eols_certificates(m);
        for (std::int64_t k = 1; k * m * (m + 1) <= 400; ++k)
            if (!check_lemma(lemma_fulllayer(m, k, certs), count, what)) return false;
    }
    double s = seconds_since(t0);
    if (s >= 120.0) {
        what = "ladder took " + std::to_string(s) + " s";
        return false;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu lemma certificates verified and rank-confirmed in %.1f s",
                  count, s);
    what = buf;
    return true;
}

// --- 3: linecut inequality on randomized instances ---------------------------

bool criterion3(std::string& what) {
    std::mt19937_64 rng(2026);
    int tested = 0;
    for (int it = 0; it < 20000 && tested < 200; ++it) {
        std::int64_t d = 2 + static_cast<std::int64_t>(rng() % 5);
        std::vector<std::int64_t> ms;
        int r = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < r; ++i) ms.push_back(1 + static_cast<std::int64_t>(rng() % 3));
        LinearSystem L = plane_system(d, MultiplicityList(ms));
        std::int64_t c = 1 + static_cast<std::int64_t>(rng() % d);
        int fam = static_cast<int>(rng() % 3);
        AffineCut f = fam == 0 ? half(0, 1, c) : fam == 1 ? half(1, 0, c) : half(1, 1, c);
        auto [d1, d2] = split(L.diagram, f);
        if (d2.empty() || d1.empty()) continue;
        std::vector<std::size_t> pick;
        std::int64_t conds = 0;
        std::int64_t want = static_cast<std::int64_t>(d2.size());
        for (std::size_t i = 0; i < ms.size() && conds < want; ++i) {
            std::int64_t c2 = ms[i] * (ms[i] + 1) / 2;
            if (conds + c2 <= want) {
                pick.push_back(i);
                conds += c2;
            }
        }
        if (conds != want) continue;
        LinearSystem L1{Diagram{}, MultiplicityList{}}, L2 = L1;
        try {
            std::tie(L1, L2) = apply_cut(L, f, pick);
        } catch (const Error&) {
            continue;
        }
        auto r2 = generic_dimension(L2, 3, rng());
        if (r2.value != -1 || r2.certainty != Certainty::CertifiedNonSpecial) continue;
        ++tested;
        auto rl = generic_dimension(L, 3, rng());
        auto r1 = generic_dimension(L1, 3, rng());
        if (rl.value > r1.value) {
            what = "violation at " + format_diagram(L.diagram) + " / " + format_mults(L.mults);
            return false;
        }
    }
    if (tested < 200) {
        what = "only " + std::to_string(tested) + " admissible instances found";
        return false;
    }
    what = std::to_string(tested) + " instances, value(L) <= value(L1) in every case";
    return true;
}

// --- 4: homogeneous sweep vs (-1)-curve criterion ----------------------------

bool criterion4(std::string& what) {
    CampaignConfig cfg;
    cfg.jobs = 4;
    auto t0 = Clock::now();
    auto records = hh_campaign(4, 15, cfg);
    double s = seconds_since(t0);
    if (s >= 600.0) {
        what = "campaign took " + std::to_string(s) + " s";
        return false;
    }
    std::size_t disagreements = 0;
    const CampaignRecord* r22 = nullptr;
    const CampaignRecord* r45 = nullptr;
    for (const auto& rec : records) {
        if (!rec.criterion_agrees) ++disagreements;
        if (rec.m == 2 && rec.d == 2 && rec.r == 2) r22 = &rec;
        if (rec.m == 2 && rec.d == 4 && rec.r == 5) r45 = &rec;
    }
    if (disagreements != 0) {
        what = std::to_string(disagreements) + " criterion disagreements";
        return false;
    }
    auto special_with_pairing2 = [](const CampaignRecord* r) {
        return r && r->verdict == Verdict::Special && r->witness &&
               r->witness->pairing_value == -2;
    };
    if (!special_with_pairing2(r22) || !special_with_pairing2(r45)) {
        what = "classical special systems missing or without pairing -2 witness";
        return false;
    }
    campaign_artifacts = records;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu records, 0 disagreements, %.1f s at 4 jobs",
                  records.size(), s);
    what = buf;
    return true;
}

// --- 5 and 6: oracle cross-validation and one-sided soundness ----------------

struct CorpusOutcome {
    std::size_t tested = 0;
    std::size_t mismatches = 0;
    std::size_t below_edim = 0;
    std::size_t certified_contradicted = 0;
};

CorpusOutcome run_corpus() {
    CorpusOutcome out;
    std::mt19937_64 rng(77);
    while (out.tested < 500) {
        // random column diagram or full triangle, |D| <= 45
        Diagram d;
        if (rng() % 2) {
            d = triangle(2 + static_cast<std::int64_t>(rng() % 7));
        } else {
            ColumnSpec spec;
            std::int64_t width = 2 + static_cast<std::int64_t>(rng() % 7);
            for (std::int64_t x = 0; x < width; ++x)
                spec.columns.push_back({1 + static_cast<std::int64_t>(rng() % 6),
                                        static_cast<std::int64_t>(rng() % 3)});
            d = make_columns(spec);
        }
        if (d.size() > 45) continue;
        std::vector<std::int64_t> ms;
        int r = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < r; ++i) ms.push_back(1 + static_cast<std::int64_t>(rng() % 3));
        LinearSystem L{d, MultiplicityList(ms)};
        auto gen = generic_dimension(L, 3, rng());
        std::vector<std::pair<std::int64_t, std::int64_t>> pts;
        for (int i = 0; i < r; ++i)
            pts.push_back({1 + static_cast<std::int64_t>(rng() % 9973),
                           1 + static_cast<std::int64_t>(rng() % 9973)});
        auto ex = exact_dimension(L, pts);
        ++out.tested;
        if (gen.value != ex.value) ++out.mismatches;
        if (gen.value < gen.edim || ex.value < ex.edim) ++out.below_edim;
        if (gen.certainty == Certainty::CertifiedNonSpecial && ex.value != gen.edim)
            ++out.certified_contradicted;
    }
    return out;
}

// --- 7: EoLS arithmetic ------------------------------------------------------

bool criterion7(std::string& what) {
    std::size_t checked = 0;
    for (std::int64_t m = 1; m <= 6; ++m) {
        for (const auto& L : eols(m)) {
            if (L.vdim() != -1) {
                what = "vdim != -1 in eols(" + std::to_string(m) + ")";
                return false;
            }
            ++checked;
        }
        if (m <= 3) {
            for (const auto& L : eols(m)) {
                auto res = generic_dimension(L, 3, 13);
                if (res.value != -1 || res.certainty != Certainty::CertifiedNonSpecial) {
                    what = "rank oracle rejects an eols(" + std::to_string(m) + ") member";
                    return false;
                }
            }
        }
    }
    what = std::to_string(checked) + " systems with vdim -1; m <= 3 rank-confirmed";
    return true;
}

// --- 8: serialization round-trips --------------------------------------------

bool criterion8(std::string& what) {
    for (const auto& text : cert_artifacts) {
        if (!roundtrip_ok(text)) {
            what = "certificate round-trip mismatch";
            return false;
        }
    }
    for (const auto& rec : campaign_artifacts) {
        auto line = campaign_record_json(rec);
        if (campaign_record_json(campaign_record_from_json(line)) != line) {
            what = "campaign record round-trip mismatch";
            return false;
        }
    }
    what = std::to_string(cert_artifacts.size()) + " certificates and " +
           std::to_string(campaign_artifacts.size()) + " campaign records round-trip";
    return true;
}

} // namespace

int main() {
    std::string what;

    report(1, criterion1(what), what);
    report(2, criterion2(what), what);
    report(3, criterion3(what), what);
    report(4, criterion4(what), what);

    auto corpus = run_corpus();
    report(5, corpus.mismatches == 0,
           std::to_string(corpus.tested) + " systems, " + std::to_string(corpus.mismatches) +
               " modular/exact mismatches");
    report(6, corpus.below_edim == 0 && corpus.certified_contradicted == 0,
           "dims below edim: " + std::to_string(corpus.below_edim) +
               ", certified verdicts contradicted: " +
               std::to_string(corpus.certified_contradicted));

    report(7, criterion7(what), what);
    report(8, criterion8(what), what);

    return all_ok ? 0 : 1;
}
