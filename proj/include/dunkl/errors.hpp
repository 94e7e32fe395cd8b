#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace dunkl {

/// An argument lies outside the domain where the quantity is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative procedure stopped before reaching the requested accuracy.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double requested, double achieved)
      : std::runtime_error(what + " (requested " + sci(requested) + ", achieved " + sci(achieved) + ")"),
        requested_(requested),
        achieved_(achieved) {}

  double requested() const noexcept { return requested_; }
  double achieved() const noexcept { return achieved_; }

 private:
  static std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
  }

  double requested_;
  double achieved_;
};

/// Two independent routes to the same quantity disagree.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reading or writing an output file failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dunkl
