#pragma once

#include "airbeam/rng.hpp"
#include "airbeam/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace airbeam {

enum class ConstraintSense { less_equal, greater_equal };

/// One linear trace constraint Tr(A Z) {<=,>=} bound with Hermitian A.
struct TraceConstraint {
  CMatrix matrix;
  ConstraintSense sense = ConstraintSense::less_equal;
  Real bound = 0.0;
};

/// Linear-objective Hermitian SDP: maximize Tr(C Z) over PSD Z subject to
/// trace constraints. Matrices are symmetrized on ingest; asymmetry beyond
/// 1e-10 relative Frobenius norm is rejected.
class SdpProblem {
 public:
  SdpProblem(CMatrix objective, std::vector<TraceConstraint> constraints);

  const CMatrix& objective() const { return objective_; }
  const std::vector<TraceConstraint>& constraints() const { return constraints_; }
  Eigen::Index dimension() const { return objective_.rows(); }

 private:
  CMatrix objective_;
  std::vector<TraceConstraint> constraints_;
};

enum class SdpStatus { optimal, infeasible, max_iterations };

/// Objectives and residuals of one interior-point iterate, reported in the
/// maximization orientation. `infeasibility_pairing` bounds how far weak
/// duality can be violated while the iterate is still primal/dual infeasible:
/// primal_objective <= dual_objective + infeasibility_pairing + o(1).
struct SdpIterate {
  Real primal_objective = 0.0;
  Real dual_objective = 0.0;
  Real infeasibility_pairing = 0.0;
  Real primal_residual = 0.0;
  Real dual_residual = 0.0;
  Real mu = 0.0;
};

struct SdpSolution {
  CMatrix z_matrix;
  SdpStatus status = SdpStatus::max_iterations;
  Real objective_value = 0.0;
  /// max over i of violation_i / (1 + |b_i|).
  Real max_constraint_violation = 0.0;
  Real duality_gap = 0.0;
  std::string message;
  std::vector<SdpIterate> iterates;
};

struct SdpOptions {
  int max_iterations = 100;
  Real tolerance = 1e-9;  // relative residual/gap target on the scaled problem
  /// When the path-following run stalls, certify infeasibility by solving the
  /// max-slack problem over the same constraints.
  bool certificate_check = true;
};

/// Maximize Tr(C Z) s.t. the trace constraints and Z PSD. Dense method,
/// dimension capped at 128.
SdpSolution solve_sdp(const SdpProblem& problem, const SdpOptions& options = {});

/// Max-slack feasibility: maximize t s.t. every constraint holds with margin
/// t (per unit Frobenius norm of its matrix) and Z PSD. Returns the
/// interior-most Z; objective_value is the achieved t and status is optimal
/// iff t >= -1e-8.
SdpSolution solve_feasibility(const std::vector<TraceConstraint>& constraints,
                              const SdpOptions& options = {});

struct HermitianEig {
  CMatrix vectors;  // unitary; columns ordered to match `values`
  RVector values;   // descending
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
HermitianEig hermitian_eig(const CMatrix& z);

struct RandomizationResult {
  CVector z;
  Real score = 0.0;
  bool feasible = false;
  Real violation = 0.0;  // value of `violation_fn` at the returned candidate
};

/// Rank-one extraction from a relaxed PSD solution. Draws `num_candidates`
/// vectors U sqrt(Sigma) e with e ~ CN(0, I), rescales each to
/// ||z||^2 = power_budget exactly, and returns the feasible candidate with
/// the highest score. A candidate is feasible when violation_fn(z) <= 0;
/// if none is, the candidate with the smallest violation is returned with
/// `feasible` false.
RandomizationResult gaussian_randomization(
    const CMatrix& z_matrix, Real power_budget,
    const std::function<Real(const CVector&)>& score_fn,
    const std::function<Real(const CVector&)>& violation_fn,
    int num_candidates, Rng& rng);

}  // namespace airbeam
