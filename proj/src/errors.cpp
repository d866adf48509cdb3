#include "pellian/errors.hpp"

namespace pellian {

Error::Error(ErrorKind kind, std::string reason, const std::string& message)
    : std::runtime_error(message), kind_(kind), reason_(std::move(reason)) {}

}  // namespace pellian
