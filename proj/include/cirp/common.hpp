#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cirp {

using cplx = std::complex<double>;
using cvec = Eigen::VectorXcd;
using rvec = Eigen::VectorXd;
using rmat = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;

/// Bad option or parameter choice (unsupported modulation order, theta out
/// of range, malformed config file, ...).
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// API misuse: mismatched dimensions, missing solution pieces, and similar
/// caller bugs.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace cirp
