#pragma once

#include <stdexcept>
#include <string>

namespace lcapego {

/// Base class for all library errors. `code()` is a stable machine-readable
/// tag used by the CLI's structured error output.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct InvalidSpec : Error {
    explicit InvalidSpec(const std::string& what) : Error("invalid_spec", what) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error("too_large", what) {}
};

struct GroupMismatch : Error {
    explicit GroupMismatch(const std::string& what) : Error("group_mismatch", what) {}
};

struct CarrierMismatch : Error {
    explicit CarrierMismatch(const std::string& what) : Error("carrier_mismatch", what) {}
};

struct WrongModel : Error {
    explicit WrongModel(const std::string& what) : Error("wrong_model", what) {}
};

struct UnconfiguredDualGrid : Error {
    explicit UnconfiguredDualGrid(const std::string& what) : Error("unconfigured_dual_grid", what) {}
};

struct GeneratorUnavailable : Error {
    explicit GeneratorUnavailable(const std::string& what) : Error("generator_unavailable", what) {}
};

} // namespace lcapego
