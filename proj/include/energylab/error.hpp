#pragma once

#include <stdexcept>
#include <string>

namespace energylab {

/// Base class for every error raised by the library.
///
/// `anchor()` names the formula or constant whose validity condition was
/// violated, so callers (and the CLI) can report it next to the message.
class Error : public std::runtime_error {
 public:
  Error(const std::string& message, std::string anchor)
      : std::runtime_error(anchor.empty() ? message : message + " [" + anchor + "]"),
        anchor_(std::move(anchor)) {}

  const std::string& anchor() const noexcept { return anchor_; }

 private:
  std::string anchor_;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Argument at (or within the guard distance of) a simple pole.
class PoleError : public DomainError {
 public:
  PoleError(const std::string& message, std::string anchor, double pole, double residue)
      : DomainError(message + " (pole at " + std::to_string(pole) + ", residue " +
                        std::to_string(residue) + ")",
                    std::move(anchor)),
        pole_(pole),
        residue_(residue) {}

  double pole() const noexcept { return pole_; }
  double residue() const noexcept { return residue_; }

 private:
  double pole_;
  double residue_;
};

/// A case the underlying closed form explicitly excludes.
class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two points coincide where the kernel is singular.
class SingularConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + message, "input format"), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace energylab
