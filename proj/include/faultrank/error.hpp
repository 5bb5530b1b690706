#pragma once

#include <stdexcept>
#include <string>

namespace faultrank {

/// Raised for malformed input or violated preconditions (bad files, unknown ids,
/// graphs a metric cannot handle). The CLI maps it to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace faultrank
