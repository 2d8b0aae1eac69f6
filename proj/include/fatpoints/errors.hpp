#ifndef FATPOINTS_ERRORS_HPP
#define FATPOINTS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fatpoints {

enum class ErrorCode {
    Parse,
    NegativeCoordinate,
    PointOnCutLine,
    ZeroCoordinate,
    PrimeTooSmall,
    CapExceeded,
    CardinalityMismatch,
    VdimMismatch,
    DivisibilityViolation,
    MissingEoLSCertificate,
    BaseMissing,
    NotProjectivePlaneSystem,
    Invalid,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace fatpoints

#endif
