#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gradid {

/// Raised when an exhaustive sweep or a dense computation would exceed its configured size limit.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::string limiting_quantity, double requested, double cap)
      : std::runtime_error(what),
        quantity_(std::move(limiting_quantity)),
        requested_(requested),
        cap_(cap) {}

  const std::string& quantity() const { return quantity_; }
  double requested() const { return requested_; }
  double cap() const { return cap_; }

 private:
  std::string quantity_;
  double requested_;
  double cap_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gradid
