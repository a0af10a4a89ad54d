#pragma once

#include <stdexcept>
#include <string>

namespace chowkit {

// Domain errors carry a stable name used by the CLI for machine-readable
// error output (exit code 2).
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define CHOWKIT_DEFINE_ERROR(NAME)                                    \
    class NAME : public Error {                                       \
    public:                                                           \
        explicit NAME(const std::string& what = #NAME)                \
            : Error(#NAME, what) {}                                   \
    }

CHOWKIT_DEFINE_ERROR(BadParams);
CHOWKIT_DEFINE_ERROR(BadIndices);
CHOWKIT_DEFINE_ERROR(BadWeight);
CHOWKIT_DEFINE_ERROR(ChartMismatch);
CHOWKIT_DEFINE_ERROR(CoincidentPoints);
CHOWKIT_DEFINE_ERROR(DimensionDrop);
CHOWKIT_DEFINE_ERROR(DoesNotFit);
CHOWKIT_DEFINE_ERROR(IndexOutOfRange);
CHOWKIT_DEFINE_ERROR(InvalidTriangulation);
CHOWKIT_DEFINE_ERROR(NotADecomposition);
CHOWKIT_DEFINE_ERROR(NotFullDimensional);
CHOWKIT_DEFINE_ERROR(NotGeneric);
CHOWKIT_DEFINE_ERROR(NotInternal);
CHOWKIT_DEFINE_ERROR(NotNormalized);
CHOWKIT_DEFINE_ERROR(OnArrangement);
CHOWKIT_DEFINE_ERROR(SizeMismatch);
CHOWKIT_DEFINE_ERROR(TooFewLeaves);
CHOWKIT_DEFINE_ERROR(TooLarge);
CHOWKIT_DEFINE_ERROR(ZeroColumn);

#undef CHOWKIT_DEFINE_ERROR

} // namespace chowkit
