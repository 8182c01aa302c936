#pragma once

#include <stdexcept>

namespace hdmd {

/// Base class for all hdmd failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define HDMD_ERROR_TYPE(Name)     \
    struct Name : Error {         \
        using Error::Error;       \
    }

// embedding
HDMD_ERROR_TYPE(BufferNotFull);
HDMD_ERROR_TYPE(WindowTooLong);
HDMD_ERROR_TYPE(NotDivisible);
HDMD_ERROR_TYPE(ShapeMismatch);
HDMD_ERROR_TYPE(NotConsistent);

// spectrum
HDMD_ERROR_TYPE(OutOfRange);
HDMD_ERROR_TYPE(ConvergenceFailure);
HDMD_ERROR_TYPE(AspectRatioInvalid);
HDMD_ERROR_TYPE(SvdFailure);
HDMD_ERROR_TYPE(KrylovDeficient);

// predictor
HDMD_ERROR_TYPE(TooFewColumns);
HDMD_ERROR_TYPE(DecompositionFailure);

// pipeline / simgen
HDMD_ERROR_TYPE(DimensionMismatch);
HDMD_ERROR_TYPE(InvalidConfig);
HDMD_ERROR_TYPE(InvalidProfile);
HDMD_ERROR_TYPE(StepFailure);

// metrics
HDMD_ERROR_TYPE(LengthMismatch);

// io / cli
HDMD_ERROR_TYPE(IoError);
HDMD_ERROR_TYPE(MalformedRow);
HDMD_ERROR_TYPE(IndexMismatch);

#undef HDMD_ERROR_TYPE

} // namespace hdmd
