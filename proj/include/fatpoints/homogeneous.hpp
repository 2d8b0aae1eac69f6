#ifndef FATPOINTS_HOMOGENEOUS_HPP
#define FATPOINTS_HOMOGENEOUS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fatpoints/cutting.hpp"
#include "fatpoints/negcurve.hpp"

namespace fatpoints {

// S(m, d0): EoLS(m) together with every L_d(m^{x r}) in the window
// d0 <= d <= d0 + m(m+1) whose vdim is >= -2m^2.
std::vector<LinearSystem> s_set(std::int64_t m, std::int64_t d0);

struct FinitelyEntry {
    std::int64_t d = 0;
    bool non_special_for_all_r = false;
    std::size_t direct_checks = 0;  // systems settled by the rank oracle
    std::size_t step_certified = 0; // systems settled by an induction step
    std::optional<std::pair<std::int64_t, std::int64_t>> failure; // (d, r)
};

struct FinitelyTable {
    std::int64_t m = 0;
    std::int64_t d_base = 0;
    std::vector<FinitelyEntry> entries;
    bool all_non_special() const {
        for (const auto& e : entries)
            if (!e.non_special_for_all_r) return false;
        return !entries.empty();
    }
};

struct FinitelyConfig {
    int trials = 2;
    std::uint64_t seed = 1;
    std::uint64_t field_prime = kDefaultPrime;
};

// Inductive non-speciality table for L_d(m^{x r}), d_base <= d <= max_d,
// all r. The base window [d_base, d_base + m(m+1)] is settled exhaustively
// by the rank oracle; later degrees combine a verified induction-step
// certificate with direct checks for the few r below the slab size.
FinitelyTable verify_finitely(std::int64_t m, std::int64_t d_base, std::int64_t max_d,
                              const FinitelyConfig& config = {});

enum class Verdict { NonSpecial, Special };

struct CampaignRecord {
    std::int64_t d = 0, m = 0, r = 0;
    std::int64_t dim = 0;
    std::int64_t vdim = 0;
    std::int64_t edim = 0;
    Verdict verdict = Verdict::NonSpecial;
    std::optional<Witness> witness;
    bool criterion_agrees = true; // special <=> (witness && dim >= 0)
    std::uint64_t seed = 0;
    Certainty certainty = Certainty::CertifiedNonSpecial;
};

struct CampaignConfig {
    int trials = 3;
    std::uint64_t seed = 1;
    std::uint64_t field_prime = kDefaultPrime;
    int jobs = 1;
};

// Sweep of homogeneous systems L_d(m^{x r}) for m <= m_max, d <= d_max,
// r up to the cutoff where full rank is reached and inherited. Records the
// oracle verdict, the witness search result, and whether the two agree.
std::vector<CampaignRecord> hh_campaign(std::int64_t m_max, std::int64_t d_max,
                                        const CampaignConfig& config = {});

std::string campaign_record_json(const CampaignRecord& rec);
CampaignRecord campaign_record_from_json(const std::string& line);
std::string campaign_summary(const std::vector<CampaignRecord>& records);

} // namespace fatpoints

#endif
