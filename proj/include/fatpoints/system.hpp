#ifndef FATPOINTS_SYSTEM_HPP
#define FATPOINTS_SYSTEM_HPP

#include <cstdint>
#include <vector>

#include "fatpoints/diagram.hpp"

namespace fatpoints {

// Multiplicities (m_1,...,m_r), every entry >= 1.
class MultiplicityList {
public:
    MultiplicityList() = default;
    explicit MultiplicityList(std::vector<std::int64_t> entries);

    const std::vector<std::int64_t>& entries() const { return entries_; }
    std::size_t count() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    // sum of binom(m_j+1, 2)
    std::int64_t conditions() const;

    friend bool operator==(const MultiplicityList&, const MultiplicityList&) = default;

private:
    std::vector<std::int64_t> entries_;
};

// L_D(m_1,...,m_r): curves supported on D with r base fat points.
struct LinearSystem {
    Diagram diagram;
    MultiplicityList mults;

    std::int64_t vdim() const {
        return static_cast<std::int64_t>(diagram.size()) - 1 - mults.conditions();
    }
    std::int64_t edim() const { return std::max(vdim(), std::int64_t{-1}); }

    friend bool operator==(const LinearSystem&, const LinearSystem&) = default;
};

// L_d(m_1,...,m_r) on the full triangle of degree d.
LinearSystem plane_system(std::int64_t d, MultiplicityList mults);

} // namespace fatpoints

#endif
