#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace delsarte {

/// A structural assumption failed (e.g. a Calabi-Yau input turned out not to
/// have a unique norm-zero character).
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the caller-supplied size cap.
struct EnumerationCapExceeded : std::runtime_error {
    EnumerationCapExceeded(std::string msg, std::uint64_t predicted)
        : std::runtime_error(std::move(msg)), predicted_order(predicted)
    {
    }
    std::uint64_t predicted_order;
};

/// A persisted document could not be parsed.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace delsarte
