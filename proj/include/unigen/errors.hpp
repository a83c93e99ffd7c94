#ifndef UNIGEN_ERRORS_HPP
#define UNIGEN_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace unigen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid group specification (syntax or a violated arithmetic constraint).
class SpecError : public Error {
 public:
  SpecError(std::string const& what, std::size_t offset)
      : Error(what), offset_(offset) {}
  explicit SpecError(std::string const& what) : Error(what) {}

  // Byte offset into the source text, or npos when not tied to a position.
  std::size_t offset() const noexcept { return offset_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t offset_ = npos;
};

// A table, subgroup count or search would exceed a configured limit.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string const& what, std::uint64_t cap, std::uint64_t reached)
      : Error(what), cap_(cap), reached_(reached) {}

  std::uint64_t cap() const noexcept { return cap_; }
  std::uint64_t reached() const noexcept { return reached_; }

 private:
  std::uint64_t cap_;
  std::uint64_t reached_;
};

// Malformed group table or group file.
class FormatError : public Error {
 public:
  using Error::Error;
};

class NotNormalError : public Error {
 public:
  NotNormalError(std::string const& what, std::uint32_t x, std::uint32_t h)
      : Error(what), x_(x), h_(h) {}

  // x * h * x^-1 lies outside the subgroup.
  std::uint32_t conjugator() const noexcept { return x_; }
  std::uint32_t element() const noexcept { return h_; }

 private:
  std::uint32_t x_;
  std::uint32_t h_;
};

class NotGeneratingError : public Error {
 public:
  using Error::Error;
};

}  // namespace unigen

#endif  // UNIGEN_ERRORS_HPP
