#ifndef RIESZL_ERRORS_HPP
#define RIESZL_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace rieszl {

// Evaluation hit a pole of the requested function.
class pole_error : public std::domain_error {
 public:
  explicit pole_error(const std::string& what, std::complex<double> at = {})
      : std::domain_error(what), location_(at) {}
  std::complex<double> location() const { return location_; }

 private:
  std::complex<double> location_;
};

// Input is outside the region where the implementation holds its
// accuracy contract.  Nothing is silently degraded.
class precision_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerically multiple (or near-multiple) zero: |L'(rho)| below the
// simplicity threshold, so 1/L'(rho) cannot be trusted.
class simplicity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Contour integration could not avoid a zero on the path, or the
// requested line of integration is invalid.
class contour_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request exceeds a hard resource guard (sieve memory, term budget).
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Zero-file parsing / validation failures.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rieszl

#endif  // RIESZL_ERRORS_HPP
