#include "airbeam/sdp.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace airbeam {

namespace {

constexpr Real kHermitianTol = 1e-10;
constexpr Real kFeasibleSlackTol = 1e-8;
constexpr Real kTiny = 1e-300;

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

void require_hermitian(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw InvalidInput(std::string(what) + ": matrix must be square");
  }
  const Real asym = (m - m.adjoint()).norm();
  if (asym > kHermitianTol * std::max(m.norm(), kTiny)) {
    throw InvalidInput(std::string(what) + ": matrix is not Hermitian within tolerance");
  }
}

/// Re(Tr(a b)) without forming the product.
Real trace_inner(const CMatrix& a, const CMatrix& b) {
  return a.transpose().cwiseProduct(b).sum().real();
}

// ---------------------------------------------------------------------------
// Interior-point core on the mixed cone (Hermitian PSD block + nonnegative
// orthant). Standard minimization form:
//
//   minimize  <C, Z> + c.v   s.t.  Tr(A_j Z) + D_j.v = b_j,  Z psd,  v >= 0
//
// solved by Nesterov-Todd scaled path following with a Mehrotra
// predictor-corrector step. All public problems are reduced to this form:
// inequality slacks and the feasibility slack variable live in v.
// ---------------------------------------------------------------------------

struct ConeProblem {
  Eigen::Index n = 0;  // psd dimension
  Eigen::Index p = 0;  // orthant dimension
  CMatrix c_psd;
  RVector c_lin;
  std::vector<CMatrix> a_psd;
  RMatrix d_lin;  // m x p
  RVector b;

  Eigen::Index rows() const { return b.size(); }
};

struct ConeResult {
  CMatrix z;
  RVector v;
  CMatrix s;
  RVector u;
  RVector y;
  bool converged = false;
  Real primal_obj = 0.0;
  Real dual_obj = 0.0;
  Real primal_res = 0.0;
  Real dual_res = 0.0;
  Real complementarity = 0.0;
  std::vector<SdpIterate> trace;
  int iterations = 0;
};

struct NtScaling {
  CMatrix r;      // R with R^H S R = R^-1 Z R^-H = diag(d)
  CMatrix r_inv;
  CMatrix w;      // R R^H
  RVector d;      // scaled spectrum, positive
  RVector w_lin;  // orthant scaling sqrt(v_i / u_i)
  RVector d_lin;  // orthant scaled point sqrt(v_i u_i)
};

NtScaling compute_scaling(const CMatrix& z, const CMatrix& s, const RVector& v,
                          const RVector& u) {
  NtScaling nt;
  const Eigen::Index n = z.rows();
  if (n > 0) {
    Eigen::LLT<CMatrix> chol_z(z);
    if (chol_z.info() != Eigen::Success) {
      throw std::runtime_error("sdp: primal iterate lost positive definiteness");
    }
    const CMatrix lz = chol_z.matrixL();
    // Spectrum of Lz^H S Lz gives the NT point: d = sqrt(lambda).
    const CMatrix m = lz.adjoint() * s * lz;
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(hermitian_part(m));
    if (eig.info() != Eigen::Success) {
      throw std::runtime_error("sdp: NT scaling eigendecomposition failed");
    }
    RVector lambda = eig.eigenvalues().cwiseMax(kTiny);
    nt.d = lambda.cwiseSqrt();
    const CMatrix q = eig.eigenvectors();
    const RVector root = nt.d.cwiseSqrt();  // lambda^(1/4)
    nt.r = lz * q * root.cwiseInverse().asDiagonal();
    nt.r_inv = root.asDiagonal() * q.adjoint() *
               lz.triangularView<Eigen::Lower>().solve(CMatrix::Identity(n, n));
    nt.w = nt.r * nt.r.adjoint();
  }
  nt.w_lin = (v.array() / u.array()).sqrt().matrix();
  nt.d_lin = (v.array() * u.array()).sqrt().matrix();
  return nt;
}

/// Largest step in [0, cap] keeping x + alpha*dx in the cone.
Real psd_step_bound(const CMatrix& x, const CMatrix& dx, Real cap) {
  if (x.rows() == 0) return cap;
  Eigen::LLT<CMatrix> chol(x);
  if (chol.info() != Eigen::Success) return 0.0;
  const CMatrix l = chol.matrixL();
  const CMatrix half = l.triangularView<Eigen::Lower>().solve(dx);
  const CMatrix t =
      l.triangularView<Eigen::Lower>().solve(CMatrix(half.adjoint())).adjoint();
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(hermitian_part(t),
                                             Eigen::EigenvaluesOnly);
  const Real lambda_min = eig.eigenvalues().minCoeff();
  if (lambda_min >= -kTiny) return cap;
  return std::min(cap, -1.0 / lambda_min);
}

Real lin_step_bound(const RVector& x, const RVector& dx, Real cap) {
  Real bound = cap;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (dx[i] < 0.0) bound = std::min(bound, -x[i] / dx[i]);
  }
  return bound;
}

struct Direction {
  CMatrix dz, ds;
  RVector dv, du, dy;
};

ConeResult solve_cone(const ConeProblem& prob, const SdpOptions& options) {
  const Eigen::Index n = prob.n;
  const Eigen::Index p = prob.p;
  const Eigen::Index m = prob.rows();
  const Real cone_dim = static_cast<Real>(n + p);

  // Starting point: well-centered multiples of the identity.
  Real row_scale = 1.0;
  for (Eigen::Index j = 0; j < m; ++j) {
    const Real rn = std::sqrt(prob.a_psd[j].squaredNorm() + prob.d_lin.row(j).squaredNorm());
    row_scale = std::max(row_scale, std::abs(prob.b[j]) / (1.0 + rn));
  }
  const Real eta_p = std::max({10.0, std::sqrt(cone_dim), row_scale});
  const Real eta_d = std::max({10.0, std::sqrt(cone_dim),
                               std::sqrt(prob.c_psd.squaredNorm() + prob.c_lin.squaredNorm())});

  ConeResult res;
  res.z = eta_p * CMatrix::Identity(n, n);
  res.v = eta_p * RVector::Ones(p);
  res.s = eta_d * CMatrix::Identity(n, n);
  res.u = eta_d * RVector::Ones(p);
  res.y = RVector::Zero(m);

  const Real b_scale = 1.0 + prob.b.norm();
  const Real c_scale = 1.0 + std::sqrt(prob.c_psd.squaredNorm() + prob.c_lin.squaredNorm());

  RVector r_p(m);
  CMatrix r_d_psd(n, n);
  RVector r_d_lin(p);

  Real best_merit = std::numeric_limits<Real>::infinity();
  int no_progress = 0;
  int tiny_steps = 0;

  for (int iter = 0; iter <= options.max_iterations; ++iter) {
    res.iterations = iter;

    // Residuals and objective values at the current iterate.
    for (Eigen::Index j = 0; j < m; ++j) {
      r_p[j] = prob.b[j] - trace_inner(prob.a_psd[j], res.z) -
               prob.d_lin.row(j).dot(res.v);
    }
    r_d_psd = prob.c_psd - res.s;
    for (Eigen::Index j = 0; j < m; ++j) r_d_psd -= res.y[j] * prob.a_psd[j];
    r_d_psd = hermitian_part(r_d_psd);
    r_d_lin = prob.c_lin - prob.d_lin.transpose() * res.y - res.u;

    res.primal_obj = trace_inner(prob.c_psd, res.z) + prob.c_lin.dot(res.v);
    res.dual_obj = prob.b.dot(res.y);
    res.complementarity = trace_inner(res.z, res.s) + res.v.dot(res.u);
    const Real mu = res.complementarity / cone_dim;
    res.primal_res = r_p.norm() / b_scale;
    res.dual_res = std::sqrt(r_d_psd.squaredNorm() + r_d_lin.squaredNorm()) / c_scale;
    const Real rel_gap =
        res.complementarity / (1.0 + std::abs(res.primal_obj) + std::abs(res.dual_obj));

    SdpIterate info;
    info.primal_objective = res.primal_obj;
    info.dual_objective = res.dual_obj;
    info.infeasibility_pairing =
        std::abs(trace_inner(r_d_psd, res.z) + r_d_lin.dot(res.v)) +
        std::abs(res.y.dot(r_p));
    info.primal_residual = res.primal_res;
    info.dual_residual = res.dual_res;
    info.mu = mu;
    res.trace.push_back(info);

    if (res.primal_res <= options.tolerance && res.dual_res <= options.tolerance &&
        rel_gap <= options.tolerance) {
      res.converged = true;
      return res;
    }

    const Real merit = res.primal_res + res.dual_res + rel_gap;
    if (merit < 0.9 * best_merit) {
      best_merit = merit;
      no_progress = 0;
    } else if (++no_progress >= 10) {
      return res;  // stalled
    }
    if (iter == options.max_iterations) return res;

    const NtScaling nt = compute_scaling(res.z, res.s, res.v, res.u);

    // Schur complement M_jk = Tr(A_j W A_k W) + sum_i D_ji w_i^2 D_ki.
    std::vector<CMatrix> waw(m);
    for (Eigen::Index j = 0; j < m; ++j) {
      waw[j] = nt.w * prob.a_psd[j] * nt.w;
    }
    const RVector w2 = nt.w_lin.cwiseProduct(nt.w_lin);
    RMatrix schur(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
      for (Eigen::Index k = 0; k <= j; ++k) {
        Real mjk = trace_inner(prob.a_psd[j], waw[k]);
        mjk += prob.d_lin.row(j).cwiseProduct(w2.transpose()).dot(prob.d_lin.row(k));
        schur(j, k) = mjk;
        schur(k, j) = mjk;
      }
    }
    Eigen::LDLT<RMatrix> schur_fact(schur);
    if (schur_fact.info() != Eigen::Success) {
      schur_fact.compute(schur + 1e-13 * schur.trace() * RMatrix::Identity(m, m));
      if (schur_fact.info() != Eigen::Success) return res;
    }

    const CMatrix w_rd_w = nt.w * r_d_psd * nt.w;

    // Shared direction solve for a given scaled complementarity target G.
    auto solve_direction = [&](const CMatrix& g_psd, const RVector& g_lin) {
      Direction dir;
      const CMatrix rgr = (n > 0) ? CMatrix(nt.r * g_psd * nt.r.adjoint()) : CMatrix(n, n);
      RVector rhs = r_p;
      for (Eigen::Index j = 0; j < m; ++j) {
        rhs[j] -= trace_inner(prob.a_psd[j], rgr);
        rhs[j] += trace_inner(prob.a_psd[j], w_rd_w);
        rhs[j] -= prob.d_lin.row(j).dot(nt.w_lin.cwiseProduct(g_lin));
        rhs[j] += prob.d_lin.row(j).dot(w2.cwiseProduct(r_d_lin));
      }
      dir.dy = schur_fact.solve(rhs);
      dir.ds = r_d_psd;
      for (Eigen::Index j = 0; j < m; ++j) dir.ds -= dir.dy[j] * prob.a_psd[j];
      dir.ds = hermitian_part(dir.ds);
      dir.du = r_d_lin - prob.d_lin.transpose() * dir.dy;
      dir.dz = hermitian_part(rgr - nt.w * dir.ds * nt.w);
      dir.dv = nt.w_lin.cwiseProduct(g_lin) - w2.cwiseProduct(dir.du);
      return dir;
    };

    // Predictor: aim at complementarity zero.
    CMatrix g_aff = CMatrix::Zero(n, n);
    g_aff.diagonal() = (-nt.d).cast<Complex>();
    const RVector g_aff_lin = -nt.d_lin;
    const Direction aff = solve_direction(g_aff, g_aff_lin);

    const Real ap_aff = std::min(psd_step_bound(res.z, aff.dz, 1.0),
                                 lin_step_bound(res.v, aff.dv, 1.0));
    const Real ad_aff = std::min(psd_step_bound(res.s, aff.ds, 1.0),
                                 lin_step_bound(res.u, aff.du, 1.0));
    Real mu_aff = trace_inner(res.z + ap_aff * aff.dz, res.s + ad_aff * aff.ds) +
                  (res.v + ap_aff * aff.dv).dot(res.u + ad_aff * aff.du);
    mu_aff = std::max(mu_aff / cone_dim, 0.0);
    const Real sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 1e-8, 1.0);

    // Corrector: recenter and remove the second-order predictor error.
    CMatrix g_corr(n, n);
    if (n > 0) {
      const CMatrix dz_scaled = nt.r_inv * aff.dz * nt.r_inv.adjoint();
      const CMatrix ds_scaled = nt.r.adjoint() * aff.ds * nt.r;
      CMatrix target = -hermitian_part(dz_scaled * ds_scaled);
      target.diagonal().array() += sigma * mu;
      target.diagonal() -= nt.d.cwiseProduct(nt.d).cast<Complex>();
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = 0; k < n; ++k) {
          g_corr(i, k) = target(i, k) * (2.0 / (nt.d[i] + nt.d[k]));
        }
      }
    }
    RVector g_corr_lin(p);
    for (Eigen::Index i = 0; i < p; ++i) {
      const Real dv_scaled = aff.dv[i] / nt.w_lin[i];
      const Real du_scaled = aff.du[i] * nt.w_lin[i];
      g_corr_lin[i] =
          (sigma * mu - nt.d_lin[i] * nt.d_lin[i] - dv_scaled * du_scaled) / nt.d_lin[i];
    }
    const Direction dir = solve_direction(g_corr, g_corr_lin);

    const Real step_frac = 0.99;
    Real alpha_p = step_frac * std::min(psd_step_bound(res.z, dir.dz, 1.0 / step_frac),
                                        lin_step_bound(res.v, dir.dv, 1.0 / step_frac));
    Real alpha_d = step_frac * std::min(psd_step_bound(res.s, dir.ds, 1.0 / step_frac),
                                        lin_step_bound(res.u, dir.du, 1.0 / step_frac));
    alpha_p = std::min(alpha_p, 1.0);
    alpha_d = std::min(alpha_d, 1.0);

    if (std::min(alpha_p, alpha_d) < 1e-7) {
      if (++tiny_steps >= 3) return res;
    } else {
      tiny_steps = 0;
    }

    res.z = hermitian_part(res.z + alpha_p * dir.dz);
    res.v += alpha_p * dir.dv;
    res.s = hermitian_part(res.s + alpha_d * dir.ds);
    res.u += alpha_d * dir.du;
    res.y += alpha_d * dir.dy;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Problem assembly and scaling.
// ---------------------------------------------------------------------------

struct ScaledCone {
  ConeProblem cone;
  RVector row_scale;     // applied to each row
  RVector col_scale;     // orthant column equilibration
  Real var_scale = 1.0;  // applied to b (variables shrink by this factor)
  Real obj_scale = 1.0;  // applied to the objective
};

// Row scale by the constraint-matrix norm (channel-level problems carry
// norms around 1e-15), then re-equilibrate the orthant columns that the row
// scaling distorted, then pull b and the objective to order one.
void apply_scaling(ScaledCone& sc) {
  const Eigen::Index m = sc.cone.rows();
  const Eigen::Index p = sc.cone.p;
  sc.row_scale = RVector::Ones(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    Real norm_j = sc.cone.a_psd[j].norm();
    if (norm_j <= kTiny) {
      norm_j = std::max(sc.cone.d_lin.row(j).cwiseAbs().maxCoeff(), kTiny);
    }
    sc.row_scale[j] = 1.0 / norm_j;
    sc.cone.a_psd[j] *= sc.row_scale[j];
    sc.cone.d_lin.row(j) *= sc.row_scale[j];
    sc.cone.b[j] *= sc.row_scale[j];
  }
  sc.col_scale = RVector::Ones(p);
  for (Eigen::Index i = 0; i < p; ++i) {
    const Real colmax = sc.cone.d_lin.col(i).cwiseAbs().maxCoeff();
    if (colmax > kTiny) {
      sc.col_scale[i] = 1.0 / colmax;
      sc.cone.d_lin.col(i) *= sc.col_scale[i];
      sc.cone.c_lin[i] *= sc.col_scale[i];
    }
  }
  sc.var_scale = 1.0 / std::max(1.0, sc.cone.b.cwiseAbs().maxCoeff());
  sc.cone.b *= sc.var_scale;
  sc.obj_scale =
      1.0 / std::max(1.0, std::sqrt(sc.cone.c_psd.squaredNorm() + sc.cone.c_lin.squaredNorm()));
  sc.cone.c_psd *= sc.obj_scale;
  sc.cone.c_lin *= sc.obj_scale;
}

/// Slack form of the public maximization problem (min form internally).
ScaledCone build_sdp_cone(const SdpProblem& problem) {
  const Eigen::Index n = problem.dimension();
  const Eigen::Index m = static_cast<Eigen::Index>(problem.constraints().size());
  ScaledCone sc;
  sc.cone.n = n;
  sc.cone.p = m;
  sc.cone.c_psd = -problem.objective();
  sc.cone.c_lin = RVector::Zero(m);
  sc.cone.d_lin = RMatrix::Zero(m, m);
  sc.cone.b = RVector(m);
  sc.cone.a_psd.reserve(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const TraceConstraint& con = problem.constraints()[j];
    sc.cone.a_psd.push_back(con.matrix);
    sc.cone.d_lin(j, j) = con.sense == ConstraintSense::less_equal ? 1.0 : -1.0;
    sc.cone.b[j] = con.bound;
  }
  apply_scaling(sc);
  return sc;
}

/// Max-slack form: maximize t with every constraint holding with margin t
/// measured per unit Frobenius norm of its matrix. The slack variable is
/// shifted by `shift` so it lives in the nonnegative orthant, and capped so
/// the problem stays bounded; both leave the sign of the optimum intact.
struct FeasibilityCone {
  ScaledCone sc;
  Real shift = 0.0;
  RVector norms;
};

FeasibilityCone build_feasibility_cone(const std::vector<TraceConstraint>& constraints) {
  const Eigen::Index m = static_cast<Eigen::Index>(constraints.size());
  const Eigen::Index n = constraints.front().matrix.rows();

  FeasibilityCone fc;
  fc.norms = RVector(m);
  RVector b_norm(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    fc.norms[j] = std::max(constraints[j].matrix.norm(), kTiny);
    b_norm[j] = constraints[j].bound / fc.norms[j];
  }
  Real slack_at_zero = std::numeric_limits<Real>::infinity();
  for (Eigen::Index j = 0; j < m; ++j) {
    const Real s0 = constraints[j].sense == ConstraintSense::greater_equal
                        ? -b_norm[j]
                        : b_norm[j];
    slack_at_zero = std::min(slack_at_zero, s0);
  }
  const Real margin = 1.0 + 0.1 * b_norm.cwiseAbs().maxCoeff();
  fc.shift = slack_at_zero - margin;
  const Real tau_cap = margin + std::abs(slack_at_zero) + 1.0;

  // Orthant layout: [tau, s_1..s_m, s_cap].
  ConeProblem& cone = fc.sc.cone;
  cone.n = n;
  cone.p = m + 2;
  cone.c_psd = CMatrix::Zero(n, n);
  cone.c_lin = RVector::Zero(m + 2);
  cone.c_lin[0] = -1.0;  // maximize tau
  cone.d_lin = RMatrix::Zero(m + 1, m + 2);
  cone.b = RVector(m + 1);
  cone.a_psd.reserve(m + 1);
  for (Eigen::Index j = 0; j < m; ++j) {
    const bool ge = constraints[j].sense == ConstraintSense::greater_equal;
    cone.a_psd.push_back(constraints[j].matrix / fc.norms[j]);
    const Real sign = ge ? -1.0 : 1.0;
    cone.d_lin(j, 0) = sign;
    cone.d_lin(j, 1 + j) = sign;
    cone.b[j] = b_norm[j] + (ge ? fc.shift : -fc.shift);
  }
  cone.a_psd.push_back(CMatrix::Zero(n, n));
  cone.d_lin(m, 0) = 1.0;
  cone.d_lin(m, m + 1) = 1.0;
  cone.b[m] = tau_cap;

  apply_scaling(fc.sc);
  return fc;
}

void fill_iterates(SdpSolution& solution, const ConeResult& result, Real unscale) {
  solution.iterates.reserve(result.trace.size());
  for (const SdpIterate& it : result.trace) {
    SdpIterate pub = it;
    pub.primal_objective = -it.primal_objective * unscale;
    pub.dual_objective = -it.dual_objective * unscale;
    pub.infeasibility_pairing = it.infeasibility_pairing * unscale;
    solution.iterates.push_back(pub);
  }
}

Real constraint_violation(const std::vector<TraceConstraint>& constraints,
                          const CMatrix& z) {
  Real worst = 0.0;
  for (const TraceConstraint& con : constraints) {
    const Real value = trace_inner(con.matrix, z);
    const Real viol = con.sense == ConstraintSense::less_equal ? value - con.bound
                                                               : con.bound - value;
    worst = std::max(worst, viol / (1.0 + std::abs(con.bound)));
  }
  return worst;
}

}  // namespace

SdpProblem::SdpProblem(CMatrix objective, std::vector<TraceConstraint> constraints)
    : objective_(std::move(objective)), constraints_(std::move(constraints)) {
  require_hermitian(objective_, "SdpProblem objective");
  objective_ = hermitian_part(objective_);
  const Eigen::Index n = objective_.rows();
  if (n < 1) throw InvalidInput("SdpProblem: dimension must be >= 1");
  if (n > 128) throw InvalidInput("SdpProblem: dense method capped at dimension 128");
  if (constraints_.empty()) {
    throw InvalidInput("SdpProblem: at least one constraint required");
  }
  for (TraceConstraint& con : constraints_) {
    require_hermitian(con.matrix, "SdpProblem constraint");
    if (con.matrix.rows() != n) {
      throw InvalidInput("SdpProblem: constraint dimension mismatch");
    }
    con.matrix = hermitian_part(con.matrix);
    if (!std::isfinite(con.bound)) throw InvalidInput("SdpProblem: bound must be finite");
  }
}

SdpSolution solve_sdp(const SdpProblem& problem, const SdpOptions& options) {
  ScaledCone sc = build_sdp_cone(problem);
  const ConeResult result = solve_cone(sc.cone, options);
  const Real unscale = 1.0 / (sc.obj_scale * sc.var_scale);

  SdpSolution solution;
  solution.z_matrix = hermitian_part(result.z / sc.var_scale);
  solution.objective_value = trace_inner(problem.objective(), solution.z_matrix);
  solution.duality_gap = std::abs(result.primal_obj - result.dual_obj) * unscale;
  solution.max_constraint_violation =
      constraint_violation(problem.constraints(), solution.z_matrix);
  fill_iterates(solution, result, unscale);

  if (result.converged) {
    solution.status = SdpStatus::optimal;
    return solution;
  }

  if (options.certificate_check) {
    SdpOptions sub = options;
    sub.certificate_check = false;
    const SdpSolution slack = solve_feasibility(problem.constraints(), sub);
    if (slack.status == SdpStatus::infeasible) {
      solution.status = SdpStatus::infeasible;
      std::ostringstream msg;
      msg << "infeasible: max-slack optimum " << slack.objective_value << " < 0";
      solution.message = msg.str();
      return solution;
    }
  }
  solution.status = SdpStatus::max_iterations;
  solution.message = "no convergence within the iteration budget";
  return solution;
}

SdpSolution solve_feasibility(const std::vector<TraceConstraint>& constraints,
                              const SdpOptions& options) {
  if (constraints.empty()) {
    throw InvalidInput("solve_feasibility: constraint list must be nonempty");
  }
  const Eigen::Index n = constraints.front().matrix.rows();
  for (const TraceConstraint& con : constraints) {
    require_hermitian(con.matrix, "solve_feasibility constraint");
    if (con.matrix.rows() != n) {
      throw InvalidInput("solve_feasibility: constraint dimension mismatch");
    }
  }
  if (n > 128) throw InvalidInput("solve_feasibility: dense method capped at 128");

  FeasibilityCone fc = build_feasibility_cone(constraints);
  const ConeResult result = solve_cone(fc.sc.cone, options);
  const Real unscale = 1.0 / (fc.sc.obj_scale * fc.sc.var_scale);

  SdpSolution solution;
  solution.z_matrix = hermitian_part(result.z / fc.sc.var_scale);
  solution.objective_value =
      result.v[0] * fc.sc.col_scale[0] / fc.sc.var_scale + fc.shift;
  solution.duality_gap = std::abs(result.primal_obj - result.dual_obj) * unscale;
  solution.max_constraint_violation = constraint_violation(constraints, solution.z_matrix);
  fill_iterates(solution, result, unscale);

  if (!result.converged) {
    solution.status = SdpStatus::max_iterations;
    solution.message = "feasibility solve did not converge";
    return solution;
  }
  if (solution.objective_value >= -kFeasibleSlackTol) {
    solution.status = SdpStatus::optimal;
  } else {
    solution.status = SdpStatus::infeasible;
    std::ostringstream msg;
    msg << "infeasible: best normalized slack " << solution.objective_value;
    solution.message = msg.str();
  }
  return solution;
}

HermitianEig hermitian_eig(const CMatrix& z) {
  require_hermitian(z, "hermitian_eig");
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(hermitian_part(z));
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigendecomposition failed");
  }
  HermitianEig out;
  out.values = eig.eigenvalues().reverse();
  out.vectors = eig.eigenvectors().rowwise().reverse();
  return out;
}

RandomizationResult gaussian_randomization(
    const CMatrix& z_matrix, Real power_budget,
    const std::function<Real(const CVector&)>& score_fn,
    const std::function<Real(const CVector&)>& violation_fn,
    int num_candidates, Rng& rng) {
  if (num_candidates < 1) {
    throw InvalidInput("gaussian_randomization: need at least one candidate");
  }
  if (!(power_budget > 0.0)) {
    throw InvalidInput("gaussian_randomization: power budget must be positive");
  }
  const HermitianEig eig = hermitian_eig(z_matrix);
  const RVector amplitudes = eig.values.cwiseMax(0.0).cwiseSqrt();
  if (amplitudes.maxCoeff() <= 0.0) {
    throw InvalidInput("gaussian_randomization: matrix is numerically zero");
  }
  const Eigen::Index n = z_matrix.rows();
  const CMatrix factor = eig.vectors * amplitudes.asDiagonal();

  RandomizationResult best;
  bool have_feasible = false;
  Real best_violation = std::numeric_limits<Real>::infinity();
  Real best_score = -std::numeric_limits<Real>::infinity();
  for (int g = 0; g < num_candidates; ++g) {
    CVector e(n);
    for (Eigen::Index i = 0; i < n; ++i) e[i] = rng.cgaussian();
    CVector cand = factor * e;
    const Real norm2 = cand.squaredNorm();
    if (norm2 <= 0.0) continue;
    cand *= std::sqrt(power_budget / norm2);
    const Real violation = violation_fn(cand);
    const bool feasible = violation <= 0.0;
    const Real score = score_fn(cand);
    if (feasible) {
      if (!have_feasible || score > best_score) {
        have_feasible = true;
        best_score = score;
        best = {cand, score, true, violation};
      }
    } else if (!have_feasible && violation < best_violation) {
      best_violation = violation;
      best = {cand, score, false, violation};
    }
  }
  if (best.z.size() == 0) {
    throw std::runtime_error("gaussian_randomization: no usable candidate drawn");
  }
  return best;
}

}  // namespace airbeam
