#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ellbill {

/// Machine-readable failure categories. The CLI reports these names verbatim.
enum class ErrorCode {
    InvalidArgument,
    DegenerateAngle,
    NotOnLine,
    VertexCoincidence,
    ZeroLengthSegment,
    DegenerateEllipse,
    PointNotOnEllipse,
    LineThroughFocus,
    CollinearVertices,
    WeightSumZero,
    NonPositiveWeight,
    FocusOutsideTriangle,
    InconsistentRatios,
    DegenerateTriangle,
    NotAcute,
    DegenerateParallelogram,
    NotParallelogram,
    InvalidDimensions,
    NotButterfly,
    DegenerateApex,
    NotAcuteHalf,
    TangentialStart,
    CausticMismatch,
    UnclassifiedPolygon,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegenerateAngle: return "DegenerateAngle";
    case ErrorCode::NotOnLine: return "NotOnLine";
    case ErrorCode::VertexCoincidence: return "VertexCoincidence";
    case ErrorCode::ZeroLengthSegment: return "ZeroLengthSegment";
    case ErrorCode::DegenerateEllipse: return "DegenerateEllipse";
    case ErrorCode::PointNotOnEllipse: return "PointNotOnEllipse";
    case ErrorCode::LineThroughFocus: return "LineThroughFocus";
    case ErrorCode::CollinearVertices: return "CollinearVertices";
    case ErrorCode::WeightSumZero: return "WeightSumZero";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::FocusOutsideTriangle: return "FocusOutsideTriangle";
    case ErrorCode::InconsistentRatios: return "InconsistentRatios";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::NotAcute: return "NotAcute";
    case ErrorCode::DegenerateParallelogram: return "DegenerateParallelogram";
    case ErrorCode::NotParallelogram: return "NotParallelogram";
    case ErrorCode::InvalidDimensions: return "InvalidDimensions";
    case ErrorCode::NotButterfly: return "NotButterfly";
    case ErrorCode::DegenerateApex: return "DegenerateApex";
    case ErrorCode::NotAcuteHalf: return "NotAcuteHalf";
    case ErrorCode::TangentialStart: return "TangentialStart";
    case ErrorCode::CausticMismatch: return "CausticMismatch";
    case ErrorCode::UnclassifiedPolygon: return "UnclassifiedPolygon";
    }
    return "Unknown";
}

class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace ellbill
