#include "fatpoints/homogeneous.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "fatpoints/errors.hpp"

namespace fatpoints {

using json = nlohmann::ordered_json;

namespace {

MultiplicityList homog(std::int64_t m, std::int64_t r) {
    return MultiplicityList(std::vector<std::int64_t>(static_cast<std::size_t>(r), m));
}

std::uint64_t system_seed(std::uint64_t base, std::int64_t d, std::int64_t m, std::int64_t r) {
    std::uint64_t h = base;
    for (std::uint64_t v : {static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(m),
                            static_cast<std::uint64_t>(r)}) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace

std::vector<LinearSystem> s_set(std::int64_t m, std::int64_t d0) {
    if (m < 1 || d0 < 1) throw Error(ErrorCode::Invalid, "s_set needs m, d0 >= 1");
    auto out = eols(m);
    std::int64_t cond = m * (m + 1) / 2;
    for (std::int64_t d = d0; d <= d0 + m * (m + 1); ++d) {
        std::int64_t terms = (d + 1) * (d + 2) / 2;
        for (std::int64_t r = 1; terms - 1 - r * cond >= -2 * m * m; ++r)
            out.push_back(plane_system(d, homog(m, r)));
    }
    return out;
}

FinitelyTable verify_finitely(std::int64_t m, std::int64_t d_base, std::int64_t max_d,
                              const FinitelyConfig& config) {
    if (m < 1 || d_base < 1 || max_d < d_base)
        throw Error(ErrorCode::Invalid, "verify_finitely needs m >= 1, 1 <= d_base <= max_d");
    std::int64_t h = m * (m + 1);
    FinitelyTable table{m, d_base, {}};
    auto eols_certs = eols_certificates(m, config.seed, config.trials);
    VerifyConfig vcfg{config.field_prime};

    // oracle scan of L_d(m^{x r}) for r = 1, 2, ...; full rank at some r is
    // inherited by every larger r
    auto scan = [&](std::int64_t d, std::int64_t r_limit,
                    FinitelyEntry& entry) -> bool {
        for (std::int64_t r = 1; r_limit < 0 || r <= r_limit; ++r) {
            LinearSystem L = plane_system(d, homog(m, r));
            auto res = generic_dimension(L, config.trials,
                                         system_seed(config.seed, d, m, r),
                                         config.field_prime);
            entry.direct_checks++;
            if (res.value != res.edim) {
                entry.failure = {d, r};
                return false;
            }
            if (res.value == -1) return true; // larger r inherit full rank
        }
        return true;
    };

    for (std::int64_t d = d_base; d <= max_d; ++d) {
        FinitelyEntry entry;
        entry.d = d;
        if (d <= d_base + h) {
            entry.non_special_for_all_r = scan(d, -1, entry);
        } else {
            auto base_it =
                std::find_if(table.entries.begin(), table.entries.end(),
                             [&](const FinitelyEntry& e) { return e.d == d - h; });
            if (base_it == table.entries.end() || !base_it->non_special_for_all_r) {
                entry.failure = {d - h, 0};
            } else {
                std::int64_t p2 = finitely_slab_mults(m, d);
                bool ok = scan(d, p2 - 1, entry);
                if (ok && entry.failure == std::nullopt) {
                    // structural checks of the step are independent of how
                    // many multiplicities the base carries; verify once with
                    // an empty base
                    CertPtr base = make_cert(CutCertificate{EmptyLeaf{
                        {triangle(d - h), MultiplicityList{}}}});
                    auto cert = theorem_finitely_step(m, d, p2, base, eols_certs);
                    auto report = verify(*cert, vcfg);
                    if (report.verified) {
                        entry.step_certified = 1;
                        entry.non_special_for_all_r = true;
                    } else {
                        entry.failure = {d, p2};
                    }
                }
            }
        }
        table.entries.push_back(entry);
    }
    return table;
}

namespace {

CampaignRecord run_system(std::int64_t d, std::int64_t m, std::int64_t r,
                          const CampaignConfig& config) {
    CampaignRecord rec;
    rec.d = d;
    rec.m = m;
    rec.r = r;
    rec.seed = system_seed(config.seed, d, m, r);
    LinearSystem L = plane_system(d, homog(m, r));
    auto res = generic_dimension(L, config.trials, rec.seed, config.field_prime);
    rec.dim = res.value;
    rec.vdim = res.vdim;
    rec.edim = res.edim;
    rec.certainty = res.certainty;
    rec.verdict = rec.dim > rec.edim ? Verdict::Special : Verdict::NonSpecial;
    if (rec.dim >= 0) rec.witness = find_witness(L);
    bool predicted_special = rec.witness.has_value() && rec.dim >= 0;
    rec.criterion_agrees = (rec.verdict == Verdict::Special) == predicted_special;
    return rec;
}

} // namespace

std::vector<CampaignRecord> hh_campaign(std::int64_t m_max, std::int64_t d_max,
                                        const CampaignConfig& config) {
    if (m_max < 1 || d_max < 1)
        throw Error(ErrorCode::Invalid, "campaign needs m_max, d_max >= 1");
    std::vector<std::pair<std::int64_t, std::int64_t>> cells;
    for (std::int64_t m = 1; m <= m_max; ++m)
        for (std::int64_t d = 1; d <= d_max; ++d) cells.emplace_back(m, d);

    std::vector<CampaignRecord> records;
    std::mutex mtx;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            auto [m, d] = cells[i];
            std::int64_t terms = (d + 1) * (d + 2) / 2;
            std::int64_t cond = m * (m + 1) / 2;
            std::vector<CampaignRecord> local;
            for (std::int64_t r = 1; r * cond <= terms + 2 * m * m; ++r) {
                auto rec = run_system(d, m, r, config);
                local.push_back(rec);
                if (rec.dim == -1) break; // full rank; larger r inherit it
            }
            std::lock_guard<std::mutex> lock(mtx);
            records.insert(records.end(), local.begin(), local.end());
        }
    };
    int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    // order-independent merge: records are keyed by (m, d, r)
    std::sort(records.begin(), records.end(), [](const CampaignRecord& a,
                                                 const CampaignRecord& b) {
        return std::tie(a.m, a.d, a.r) < std::tie(b.m, b.d, b.r);
    });
    return records;
}

std::string campaign_record_json(const CampaignRecord& rec) {
    json j;
    j["version"] = 1;
    j["d"] = rec.d;
    j["m"] = rec.m;
    j["r"] = rec.r;
    j["dim"] = rec.dim;
    j["vdim"] = rec.vdim;
    j["edim"] = rec.edim;
    j["verdict"] = rec.verdict == Verdict::Special ? "special" : "nonspecial";
    if (rec.witness) {
        json w;
        w["degree"] = rec.witness->curve_class.d;
        w["mults"] = rec.witness->curve_class.mults;
        w["pairing"] = rec.witness->pairing_value;
        w["source"] = rec.witness->source;
        j["witness"] = w;
    }
    j["agrees"] = rec.criterion_agrees;
    j["seed"] = rec.seed;
    j["certainty"] = certainty_name(rec.certainty);
    return j.dump();
}

CampaignRecord campaign_record_from_json(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Parse, std::string("record parse error: ") + e.what());
    }
    CampaignRecord rec;
    rec.d = j.at("d").get<std::int64_t>();
    rec.m = j.at("m").get<std::int64_t>();
    rec.r = j.at("r").get<std::int64_t>();
    rec.dim = j.at("dim").get<std::int64_t>();
    rec.vdim = j.at("vdim").get<std::int64_t>();
    rec.edim = j.at("edim").get<std::int64_t>();
    rec.verdict = j.at("verdict").get<std::string>() == "special" ? Verdict::Special
                                                                  : Verdict::NonSpecial;
    if (j.contains("witness")) {
        Witness w;
        w.curve_class.d = j["witness"].at("degree").get<std::int64_t>();
        w.curve_class.mults = j["witness"].at("mults").get<std::vector<std::int64_t>>();
        w.pairing_value = j["witness"].at("pairing").get<std::int64_t>();
        w.source = j["witness"].at("source").get<std::string>();
        rec.witness = w;
    }
    rec.criterion_agrees = j.at("agrees").get<bool>();
    rec.seed = j.at("seed").get<std::uint64_t>();
    const std::string c = j.at("certainty").get<std::string>();
    rec.certainty = c == "CertifiedNonSpecial" ? Certainty::CertifiedNonSpecial
                    : c == "ProbablySpecial"   ? Certainty::ProbablySpecial
                                               : Certainty::ExactRational;
    return rec;
}

std::string campaign_summary(const std::vector<CampaignRecord>& records) {
    std::map<std::pair<std::int64_t, std::int64_t>, std::pair<std::size_t, std::size_t>> cells;
    std::size_t disagreements = 0;
    for (const auto& rec : records) {
        auto& cell = cells[{rec.m, rec.d}];
        (rec.verdict == Verdict::Special ? cell.second : cell.first)++;
        if (!rec.criterion_agrees) ++disagreements;
    }
    std::ostringstream out;
    out << "   m    d  nonspecial  special\n";
    for (const auto& [key, counts] : cells) {
        out << std::setw(4) << key.first << ' ' << std::setw(4) << key.second << ' '
            << std::setw(11) << counts.first << ' ' << std::setw(8) << counts.second << '\n';
    }
    out << "records: " << records.size() << ", criterion disagreements: " << disagreements
        << '\n';
    return out.str();
}

} // namespace fatpoints
