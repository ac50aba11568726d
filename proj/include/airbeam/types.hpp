#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace airbeam {

using Real = double;
using Complex = std::complex<Real>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using CRowVector = Eigen::RowVectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Precondition violations on user-supplied values (distances, indices, ...).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Channel matrix too ill-conditioned for the requested operation.
struct SingularChannel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Configuration file errors (parse, unknown key, failed validation).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace airbeam
