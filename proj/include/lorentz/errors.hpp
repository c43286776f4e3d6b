#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace lorentz {

enum class ErrorKind { InvalidArgument, Domain, NotLorentz, Numerical };

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::optional<double> residual = std::nullopt)
        : std::runtime_error(what), kind_(kind), residual_(residual) {}

    ErrorKind kind() const { return kind_; }
    std::optional<double> residual() const { return residual_; }

private:
    ErrorKind kind_;
    std::optional<double> residual_;
};

}  // namespace lorentz
