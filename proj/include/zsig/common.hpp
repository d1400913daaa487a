#pragma once

#include <stdexcept>
#include <string>

namespace zsig {

/// Error type thrown by every precondition and arithmetic-domain violation
/// in the library (bad field spec, descriptor mismatch, division by zero,
/// inexact division, ...).
class error : public std::runtime_error {
  public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw error(what);
}

}  // namespace zsig
