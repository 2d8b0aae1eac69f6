#ifndef FATPOINTS_CUTTING_HPP
#define FATPOINTS_CUTTING_HPP

#include <map>
#include <optional>

#include "fatpoints/certificate.hpp"

namespace fatpoints {

struct VerifyConfig {
    std::uint64_t field_prime = kDefaultPrime;
    // seed/trials for ModularRank leaves come from the leaves themselves
};

struct SearchConfig {
    int max_depth = 6;
    std::size_t rank_threshold = 60; // close subtrees this small with a RankLeaf
    int trials = 2;
    std::uint64_t seed = 1;
    std::uint64_t field_prime = kDefaultPrime;
};

// Split L along f, giving mults with indices in mult_split to the D2 side.
// Requires vdim of the D2 system to be exactly -1.
std::pair<LinearSystem, LinearSystem> apply_cut(const LinearSystem& L, const AffineCut& f,
                                                const std::vector<std::size_t>& mult_split);

// Recursive re-validation of every node; never throws, failures are reported.
ProofReport verify(const CutCertificate& cert, const VerifyConfig& config = {});

// Constructive certificates for the layer-peeling lemmas. All roots have
// vdim = -1.
CertPtr lemma_backtriangle(std::int64_t m);
CertPtr lemma_twotriangles(std::int64_t m);
CertPtr lemma_singlelayer(std::int64_t m, std::int64_t k);               // (m+1) | k
CertPtr lemma_fatlayer(std::int64_t m, std::int64_t k, std::int64_t h);  // (m+1)|k, m|h

// The m+1 end-of-layer systems, each with vdim = -1.
std::vector<LinearSystem> eols(std::int64_t m);

// ModularRank certificates for every EoLS(m) member, keyed by k = 1..m+1.
std::map<std::int64_t, CertPtr> eols_certificates(std::int64_t m, std::uint64_t seed = 1,
                                                  int trials = 2);

CertPtr lemma_fulllayer(std::int64_t m, std::int64_t k,
                        const std::map<std::int64_t, CertPtr>& eols_certs);

// One induction step for L_d(m^{x p}): a diagonal slab of thickness m(m+1)
// goes to the fulllayer certificate, the rest to the supplied certificate
// for L_{d-m(m+1)}(m^{x (p - slab mults)}). Requires p >= 2d - m(m+1) + 3.
CertPtr theorem_finitely_step(std::int64_t m, std::int64_t d, std::int64_t p, CertPtr base,
                              const std::map<std::int64_t, CertPtr>& eols_certs);

std::int64_t finitely_slab_mults(std::int64_t m, std::int64_t d); // 2d - m(m+1) + 3

// Bounded depth-first search over the three admissible cut families.
// Deterministic for fixed input; returns the first verifying certificate.
std::optional<CertPtr> search_cut_proof(const LinearSystem& L, const SearchConfig& config = {});

// Expand a LemmaLeaf into its constructive tree.
CertPtr lemma_expand(const std::string& name, const std::vector<std::int64_t>& params);

} // namespace fatpoints

#endif
