#ifndef FATPOINTS_INTERP_HPP
#define FATPOINTS_INTERP_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fatpoints/system.hpp"

namespace fatpoints {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;
inline constexpr std::int64_t kDefaultExactCap = 300;

// a(a-1)...(a-b+1); 1 for b = 0, 0 for b > a.
std::int64_t falling_factorial(std::int64_t a, std::int64_t b);

// Row index of M(L): derivative beta taken at point j, |beta| < m_j.
struct ConditionIndex {
    std::size_t point_index = 0; // 0-based j
    LatticePoint derivative;     // beta
    friend bool operator==(const ConditionIndex&, const ConditionIndex&) = default;
};

// Rows of M(L) in canonical order: points in list order, beta ascending (x, y).
std::vector<ConditionIndex> condition_rows(const MultiplicityList& mults);

// M(L) evaluated at concrete points over F_p.
struct InterpMatrixFp {
    std::vector<ConditionIndex> rows;
    std::vector<LatticePoint> cols;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> point_values;
    std::uint64_t modulus = kDefaultPrime;
    std::vector<std::vector<std::uint64_t>> entries; // rows.size() x cols.size()
};

// M(L) at integer points, exact.
struct InterpMatrixExact {
    std::vector<ConditionIndex> rows;
    std::vector<LatticePoint> cols;
    std::vector<std::pair<std::int64_t, std::int64_t>> point_values;
    std::vector<std::vector<BigInt>> entries;
};

// Coordinates must all be nonzero; p must be prime and large enough that no
// falling-factorial coefficient can vanish mod p (p > max diagram coordinate
// suffices; checked).
InterpMatrixFp build_matrix_fp(const LinearSystem& L,
                               const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points,
                               std::uint64_t p);

InterpMatrixExact build_matrix_exact(
    const LinearSystem& L, const std::vector<std::pair<std::int64_t, std::int64_t>>& points);

std::size_t rank_fp(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

// Fraction-free (Bareiss) elimination.
std::size_t rank_exact(std::vector<std::vector<BigInt>> m);

enum class Certainty {
    CertifiedNonSpecial, // value == edim, unconditionally correct
    ProbablySpecial,     // value > edim at every sampled point set
    ExactRational,       // exact rank at the given points
};

struct TrialRecord {
    std::uint64_t seed = 0;
    std::size_t rank = 0;
    std::int64_t value = 0;
};

struct DimensionResult {
    std::int64_t value = -1;
    Certainty certainty = Certainty::CertifiedNonSpecial;
    std::int64_t vdim = 0;
    std::int64_t edim = -1;
    std::uint64_t modulus = 0;
    std::uint64_t seed = 0;
    std::vector<TrialRecord> trials;
    double error_bound = 0.0; // Schwartz-Zippel bound when ProbablySpecial
};

// dim = #D - rank M(L) - 1 at random points of F_p, min over trials.
// Specialization can only drop rank, so the value is always >= edim; equality
// certifies non-speciality. Stops early once edim is reached.
DimensionResult generic_dimension(const LinearSystem& L, int trials, std::uint64_t seed,
                                  std::uint64_t p = kDefaultPrime);

// Exact rank at the given integer points. Lower bound for dim at these
// specific points only.
DimensionResult exact_dimension(const LinearSystem& L,
                                const std::vector<std::pair<std::int64_t, std::int64_t>>& points,
                                std::int64_t cap = kDefaultExactCap);

// For #D = m(m+1)/2: true iff D does not lie on a curve of degree m-1,
// equivalently L_D(m) is non-special. Exact arithmetic.
bool onemult_check(const Diagram& d, std::int64_t m);

std::string certainty_name(Certainty c);

} // namespace fatpoints

#endif
