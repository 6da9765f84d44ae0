#pragma once

#include <stdexcept>
#include <string>

namespace equipart {

/// Caller passed something outside an operation's domain (CLI exit 2).
class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed, e.g. a zero determinant or a
/// missing canonical state (CLI exit 3).
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured resource guard was exceeded (CLI exit 4).
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw invalid_argument(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw internal_error(what);
}

}  // namespace detail
}  // namespace equipart
