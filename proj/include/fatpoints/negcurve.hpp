#ifndef FATPOINTS_NEGCURVE_HPP
#define FATPOINTS_NEGCURVE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fatpoints/system.hpp"

namespace fatpoints {

// Class d*H - sum m_i E_i on the blow-up of the plane. Negative mults are
// allowed mid-computation; trailing zeros are ignored for comparison.
struct DivisorClass {
    std::int64_t d = 0;
    std::vector<std::int64_t> mults;

    DivisorClass() = default;
    DivisorClass(std::int64_t degree, std::vector<std::int64_t> m)
        : d(degree), mults(std::move(m)) {}

    DivisorClass normalized() const; // trailing zeros stripped
    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.normalized().d == b.normalized().d &&
               a.normalized().mults == b.normalized().mults;
    }
    std::string str() const;
};

// d*d' - sum m_i*m_i' (shorter list padded with zeros)
std::int64_t pairing(const DivisorClass& a, const DivisorClass& b);

// One quadratic transform on the three largest multiplicities.
struct CremonaMove {
    std::size_t i, j, k; // positions in the class at the time of the move
};

struct CremonaTrace {
    DivisorClass result;
    std::vector<CremonaMove> moves;
};

// Repeatedly apply the quadratic transform to the three largest mults while
// d >= 0 and m1+m2+m3 > d. Each move strictly decreases d, so this stops.
CremonaTrace cremona_reduce(const DivisorClass& c);

// Self-intersection -1, anticanonical degree 1, and Cremona-equivalent to an
// exceptional class.
bool is_minus_one_class(const DivisorClass& c);

struct Witness {
    DivisorClass curve_class;
    std::int64_t pairing_value = 0; // <= -2
    std::string source;             // which template or trace step produced it
};

// (-1)-curve with pairing <= -2 against L's class, when the template and
// Cremona-trace search finds one. L must live on a full triangle diagram.
std::optional<Witness> find_witness(const LinearSystem& L);

} // namespace fatpoints

#endif
