#ifndef FATPOINTS_CERTIFICATE_HPP
#define FATPOINTS_CERTIFICATE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fatpoints/interp.hpp"
#include "fatpoints/system.hpp"

namespace fatpoints {

struct CutCertificate;
using CertPtr = std::shared_ptr<const CutCertificate>;

enum class LeafStrategy { OneMult, ModularRank };

// Direct verification that the leaf system is non-special.
struct RankLeaf {
    LinearSystem system;
    LeafStrategy strategy = LeafStrategy::ModularRank;
    std::uint64_t seed = 0;
    int trials = 2;
};

// Non-speciality transported along diagram equivalence:
// translate(system.diagram, translation) == inner diagram, same mults.
struct EquivLeaf {
    LinearSystem system;
    std::pair<std::int64_t, std::int64_t> translation;
    CertPtr inner;
};

// One application of the cutting step. mult_split lists the indices of
// system.mults assigned to the D2 = {F > 0} side; the sub2 system must
// have vdim = -1.
struct CutNode {
    LinearSystem system;
    AffineCut cut;
    std::vector<std::size_t> mult_split;
    CertPtr sub2; // L_{D2}(selected mults)
    CertPtr sub1; // L_{D1}(remaining mults)
};

// Named constructive lemma, expanded on demand by the checker.
struct LemmaLeaf {
    std::string name; // backtriangle | twotriangles | singlelayer | fatlayer | fulllayer
    std::vector<std::int64_t> params;
};

// No conditions at all: dim = #D - 1 by definition.
struct EmptyLeaf {
    LinearSystem system;
};

struct CutCertificate {
    std::variant<RankLeaf, EquivLeaf, CutNode, LemmaLeaf, EmptyLeaf> node;

    // Root system of the subtree; LemmaLeaf is expanded to find it.
    const LinearSystem& system() const;
};

CertPtr make_cert(CutCertificate c);

struct ProofReport {
    bool verified = false;
    std::int64_t concluded_dim = -1; // = edim of the root when verified
    std::size_t node_count = 0;
    std::size_t rank_leaves = 0;
    std::size_t equiv_leaves = 0;
    std::size_t cut_nodes = 0;
    std::size_t lemma_leaves = 0;
    std::size_t empty_leaves = 0;
    std::size_t max_depth = 0; // cut nesting
    std::string failure_path;  // empty when verified
};

inline constexpr int kCertificateFormatVersion = 1;

std::string serialize_certificate(const CutCertificate& cert);
CutCertificate parse_certificate(const std::string& json_text);

bool operator==(const CutCertificate& a, const CutCertificate& b);

} // namespace fatpoints

#endif
