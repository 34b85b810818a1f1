#pragma once

#include <stdexcept>
#include <string>

namespace sdmawc {

/// Enumeration/search budget exceeded (CLI exit code 3).
class ResourceError : public std::runtime_error {
   public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency violation, e.g. a mutual information below the
/// clamping floor (CLI exit code 4).
class InternalError : public std::logic_error {
   public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// A declared precondition on the input model does not hold
/// (e.g. degradedness assertion).
class PreconditionError : public std::invalid_argument {
   public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace sdmawc
