#pragma once

#include <stdexcept>
#include <string>

namespace termnet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a fit is requested on fewer usable histogram bins than required.
struct InsufficientDataError : Error {
    using Error::Error;
};

/// Pipeline failure carrying the name of the stage that produced it.
struct PipelineError : Error {
    std::string stage;

    PipelineError(std::string stage_name, const std::string& what)
        : Error("stage " + stage_name + ": " + what), stage(std::move(stage_name)) {}
};

}  // namespace termnet
