#ifndef MACLANE_ERROR_HPP
#define MACLANE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace maclane {

enum class ErrorCode {
    NotTwoConnected,
    IsACycle,
    NotAThread,
    UnknownEdgeId,
    NotConnected,
    NotPlanarEmbedding,
    FaceNotInEmbedding,
    FaceIndexOutOfRange,
    EndpointNotOnFace,
    PathNotDisjoint,
    NotASimpleBasis,
    ThreadCoverViolation,
    InternalContradiction,
    SearchBudgetExceeded,
    InvalidEmbedding,
    ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace maclane

#endif
