#pragma once

#include <stdexcept>
#include <string>

namespace fpg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FPG_DEFINE_ERROR(Name)            \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

FPG_DEFINE_ERROR(InvalidArgument);
FPG_DEFINE_ERROR(ResourceLimitExceeded);

}  // namespace fpg
