// Copyright 2026 The catcsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "catcsum/dynamics/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "catcsum/dynamics/banded_operator.hpp"
#include "catcsum/error.hpp"

namespace catcsum::dynamics {

namespace {

constexpr double kMinEigenvalueFailure = -1e-6;
constexpr Complex kI(0.0, 1.0);

double b_population(const Eigen::VectorXcd& psi, int n_fock) {
  return psi.segment(level_index(Level::b) * n_fock, n_fock).squaredNorm();
}

double b_population(const RowMatrix& rho, int n_fock) {
  const int offset = level_index(Level::b) * n_fock;
  double p = 0.0;
  for (int n = 0; n < n_fock; ++n) p += rho(offset + n, offset + n).real();
  return p;
}

bool should_sample(int step, int n_steps, int every) {
  return step == n_steps || (every > 0 && step % every == 0);
}

constexpr Eigen::Index kTile = 16;

// rho <- (rho + rho^H) / 2 in place.
void symmetrize(RowMatrix& rho) {
  const Eigen::Index n = rho.rows();
  for (Eigen::Index i0 = 0; i0 < n; i0 += kTile) {
    const Eigen::Index i1 = std::min(n, i0 + kTile);
    for (Eigen::Index j0 = i0; j0 < n; j0 += kTile) {
      const Eigen::Index j1 = std::min(n, j0 + kTile);
      for (Eigen::Index i = i0; i < i1; ++i) {
        for (Eigen::Index j = std::max(j0, i); j < j1; ++j) {
          const Complex m = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
          rho(i, j) = m;
          rho(j, i) = std::conj(m);
        }
      }
    }
  }
}

// out = -i (x - x^H), filled in square tiles to keep the transposed reads
// cache-local.
void antihermitian_part(const RowMatrix& x, RowMatrix& out) {
  const Eigen::Index n = x.rows();
  for (Eigen::Index i0 = 0; i0 < n; i0 += kTile) {
    const Eigen::Index i1 = std::min(n, i0 + kTile);
    for (Eigen::Index j0 = i0; j0 < n; j0 += kTile) {
      const Eigen::Index j1 = std::min(n, j0 + kTile);
      for (Eigen::Index i = i0; i < i1; ++i) {
        for (Eigen::Index j = std::max(j0, i); j < j1; ++j) {
          const Complex a = x(i, j);
          const Complex c = x(j, i);
          const double re = a.imag() + c.imag();
          const double im = c.real() - a.real();
          out(i, j) = Complex(re, im);
          out(j, i) = Complex(re, -im);
        }
      }
    }
  }
}

// Right-hand side of the master equation, written as
//   L(rho) = -i (K rho - (K rho)^H) + sum_k L_k rho L_k^H,
// with the non-Hermitian kernel K(t) = H(t) - (i/2) sum_k L_k^H L_k.
// The identity needs rho Hermitian, which every RK4 stage preserves.
class LindbladGenerator {
 public:
  LindbladGenerator(const TimeDependentOperator& h, const std::vector<Operator>& collapse)
      : kernel_(h.dims(), kernel_components(h, collapse)), k_(kernel_.layout()) {
    for (const auto& op : collapse) {
      require_same_dims(h.dims(), op.dims());
      jumps_.push_back(BandedOperator::from_sparse(op.dims(), op.data()));
    }
    const int d = h.dims().total_dim();
    x_.resize(d, d);
  }

  void set_time(double t) { kernel_.evaluate_into(t, k_); }

  void apply(const RowMatrix& rho, RowMatrix& out) {
    x_.setZero();
    k_.multiply_add(rho, x_);
    antihermitian_part(x_, out);
    for (const auto& jump : jumps_) jump.sandwich_add(rho, out);
  }

 private:
  static std::vector<PhaseFactorizedMatrix::Component> kernel_components(
      const TimeDependentOperator& h, const std::vector<Operator>& collapse) {
    auto comps = h.components();
    if (!collapse.empty()) {
      SparseMatrix damping(h.dims().total_dim(), h.dims().total_dim());
      for (const auto& op : collapse) {
        damping += SparseMatrix(op.data().adjoint() * op.data());
      }
      comps.push_back({std::move(damping), 0.0, Complex(0.0, -0.5)});
    }
    return comps;
  }

  PhasedBandedOperator kernel_;
  BandedOperator k_;
  std::vector<BandedOperator> jumps_;
  RowMatrix x_;
};

}  // namespace

EvolutionConfig EvolutionConfig::for_operator(const TimeDependentOperator& h, double t_final,
                                              int points_per_period, double dt_scale) {
  if (h.max_frequency() == 0.0) {
    throw Error(ErrorCode::invalid_argument,
                "static Hamiltonian has no natural step; set dt explicitly");
  }
  if (!(dt_scale > 0.0) || dt_scale > 1.0) {
    throw Error(ErrorCode::invalid_argument, "dt_scale must lie in (0, 1]");
  }
  EvolutionConfig cfg;
  cfg.points_per_period = points_per_period;
  cfg.t_final = t_final;
  cfg.dt = dt_scale * 2.0 * std::numbers::pi / (h.max_frequency() * points_per_period);
  cfg.validate(h);
  return cfg;
}

int EvolutionConfig::n_steps() const {
  if (!(dt > 0.0) || !(t_final >= 0.0)) {
    throw Error(ErrorCode::invalid_argument, "evolution needs dt > 0 and t_final >= 0");
  }
  // Tolerate round-off when t_final is an exact multiple of dt.
  return std::max(1, static_cast<int>(std::ceil(t_final / dt * (1.0 - 1e-12))));
}

void EvolutionConfig::validate(const TimeDependentOperator& h) const {
  if (method != Method::rk4) {
    throw Error(ErrorCode::invalid_argument, "unsupported integration method");
  }
  if (points_per_period < kMinPointsPerPeriod) {
    throw Error(ErrorCode::invalid_argument, "points_per_period must be >= 20");
  }
  n_steps();
  if (h.max_frequency() > 0.0) {
    const double bound = 2.0 * std::numbers::pi / (h.max_frequency() * points_per_period);
    if (step() > bound * (1.0 + 1e-12)) {
      std::ostringstream os;
      os << "time step " << step() << " us exceeds the resolution bound " << bound << " us";
      throw Error(ErrorCode::invalid_argument, os.str());
    }
  }
}

SchrodingerResult evolve_schrodinger(const TimeDependentOperator& h, const PureState& psi0,
                                     const EvolutionConfig& cfg) {
  require_same_dims(h.dims(), psi0.dims());
  cfg.validate(h);
  const int n_fock = h.dims().fock_cutoff();
  const int steps = cfg.n_steps();
  const double dt = cfg.step();

  SparseMatrix hk = h.pattern();
  Eigen::VectorXcd psi = psi0.amplitudes();
  Eigen::VectorXcd acc(psi.size()), tmp(psi.size()), k(psi.size());

  std::vector<Sample> samples{{0.0, b_population(psi, n_fock), psi.squaredNorm()}};
  double b_max = samples.front().b_population;

  for (int s = 0; s < steps; ++s) {
    const double t = s * dt;
    h.evaluate_into(t, hk);
    k.noalias() = -kI * (hk * psi);
    acc = psi + (dt / 6.0) * k;
    tmp = psi + (dt / 2.0) * k;
    h.evaluate_into(t + 0.5 * dt, hk);
    k.noalias() = -kI * (hk * tmp);
    acc += (dt / 3.0) * k;
    tmp = psi + (dt / 2.0) * k;
    k.noalias() = -kI * (hk * tmp);
    acc += (dt / 3.0) * k;
    tmp = psi + dt * k;
    h.evaluate_into(t + dt, hk);
    k.noalias() = -kI * (hk * tmp);
    psi = acc + (dt / 6.0) * k;

    const double pb = b_population(psi, n_fock);
    b_max = std::max(b_max, pb);
    if (should_sample(s + 1, steps, cfg.sample_every)) {
      const double norm_sq = psi.squaredNorm();
      if (!std::isfinite(norm_sq)) {
        throw Error(ErrorCode::integration_failure, "state became non-finite");
      }
      samples.push_back({(s + 1) * dt, pb, norm_sq});
    }
  }

  const double drift = std::abs(psi.norm() - 1.0);
  if (!(drift <= kDriftFailure)) {
    std::ostringstream os;
    os << "norm drift " << drift << " exceeds " << kDriftFailure;
    throw Error(ErrorCode::integration_failure, os.str());
  }
  return {PureState(h.dims(), std::move(psi), 2.0 * kDriftFailure + kDriftFailure * kDriftFailure),
          drift,
          b_max,
          steps,
          dt,
          std::move(samples)};
}

LindbladResult evolve_lindblad(const TimeDependentOperator& h,
                               const std::vector<Operator>& collapse,
                               const DensityMatrix& rho0, const EvolutionConfig& cfg) {
  require_same_dims(h.dims(), rho0.dims());
  cfg.validate(h);
  const int n_fock = h.dims().fock_cutoff();
  const int d = h.dims().total_dim();
  const int steps = cfg.n_steps();
  const double dt = cfg.step();

  LindbladGenerator gen(h, collapse);
  RowMatrix rho = rho0.data();
  RowMatrix acc(d, d), tmp(d, d), k(d, d);

  std::vector<Sample> samples{{0.0, b_population(rho, n_fock), rho.trace().real()}};
  double b_max = samples.front().b_population;
  double trace_drift = std::abs(samples.front().norm - 1.0);

  for (int s = 0; s < steps; ++s) {
    const double t = s * dt;
    gen.set_time(t);
    gen.apply(rho, k);
    acc = rho + (dt / 6.0) * k;
    tmp = rho + (dt / 2.0) * k;
    gen.set_time(t + 0.5 * dt);
    gen.apply(tmp, k);
    acc += (dt / 3.0) * k;
    tmp = rho + (dt / 2.0) * k;
    gen.apply(tmp, k);
    acc += (dt / 3.0) * k;
    tmp = rho + dt * k;
    gen.set_time(t + dt);
    gen.apply(tmp, k);
    rho = acc + (dt / 6.0) * k;
    symmetrize(rho);

    const double pb = b_population(rho, n_fock);
    b_max = std::max(b_max, pb);
    const double tr = rho.trace().real();
    trace_drift = std::max(trace_drift, std::abs(tr - 1.0));
    if (should_sample(s + 1, steps, cfg.sample_every)) {
      if (!std::isfinite(tr)) {
        throw Error(ErrorCode::integration_failure, "density matrix became non-finite");
      }
      samples.push_back({(s + 1) * dt, pb, tr});
    }
  }

  if (!(trace_drift <= kDriftFailure)) {
    std::ostringstream os;
    os << "trace drift " << trace_drift << " exceeds " << kDriftFailure;
    throw Error(ErrorCode::integration_failure, os.str());
  }
  DensityMatrix out(h.dims(), Eigen::MatrixXcd(rho),
                    DensityTolerance{kDriftFailure, 1e-10, -1.0e300});
  const double lmin = out.min_eigenvalue();
  if (lmin < kMinEigenvalueFailure) {
    std::ostringstream os;
    os << "final density matrix has eigenvalue " << lmin;
    throw Error(ErrorCode::integration_failure, os.str());
  }
  return {std::move(out), trace_drift, b_max, lmin, steps, dt, std::move(samples)};
}

PureState evolve_effective_analytic(const model::DispersiveShifts& shifts, const PureState& psi0,
                                    double t) {
  const int n_fock = psi0.dims().fock_cutoff();
  const Eigen::VectorXcd& in = psi0.amplitudes();
  const int b_offset = level_index(Level::b) * n_fock;
  if (in.segment(b_offset, n_fock).cwiseAbs().maxCoeff() > 1e-10) {
    throw Error(ErrorCode::invalid_state,
                "closed-form dispersive evolution requires an unpopulated |b> level");
  }
  Eigen::VectorXcd out = in;
  const double lambdas[] = {0.0, shifts.lambda1, shifts.lambda2};
  for (int level = 1; level <= 2; ++level) {
    for (int n = 0; n < n_fock; ++n) {
      out(level * n_fock + n) *= std::polar(1.0, lambdas[level] * n * t);
    }
  }
  out.segment(b_offset, n_fock).setZero();
  return PureState(psi0.dims(), std::move(out), kNormTolerance);
}

}  // namespace catcsum::dynamics
