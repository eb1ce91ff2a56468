#pragma once

#include <stdexcept>
#include <string>

namespace polymat {

/// Thrown when an enumeration or search would exceed its configured cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polymat
