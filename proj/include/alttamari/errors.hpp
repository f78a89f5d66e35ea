#pragma once

#include <stdexcept>
#include <string>

namespace alttamari {

/// Malformed textual input (path word, composition or increment literal).
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &what, std::size_t position)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

/// Well-formed input that violates a documented domain condition,
/// e.g. a path that is not weakly above its base or an invalid vector.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation was not met by the caller.
class ContractError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// A tree rotation whose new node falls outside the region L_{delta,nu}.
class RotationLeavesRegion : public ContractError {
  public:
    using ContractError::ContractError;
};

/// A structural property that must always hold was observed to fail.
/// Seeing one of these means the implementation is wrong.
class InvariantBreach : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace alttamari
