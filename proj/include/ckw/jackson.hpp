// Copyright 2026 The ckw Authors
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

#ifndef CKW_JACKSON_HPP_
#define CKW_JACKSON_HPP_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ckw/cutoff.hpp"
#include "ckw/jet.hpp"
#include "ckw/kernels.hpp"
#include "ckw/quadrature.hpp"
#include "ckw/whitney.hpp"

namespace ckw {

// J_N(t) = gamma_N (sin(M t / 2) / sin(t / 2))^4 on [-pi, pi], M = floor(N/2),
// with gamma_N fixed by unit mass. J_N is a nonnegative even trigonometric
// polynomial of degree 2M - 2 <= N.
class JacksonKernel {
 public:
  explicit JacksonKernel(int N);

  int N() const { return N_; }
  int reduced_degree() const { return M_; }
  double gamma() const { return gamma_; }
  // Integral of the unnormalized fourth power, as computed by quadrature.
  double raw_mass() const { return raw_mass_; }

  double operator()(double t) const { return gamma_ * RawPower(t); }
  // sin(M t/2) / sin(t/2); the Chebyshev form U_{M-1}(cos(t/2)) is used near
  // t = 0 where the quotient is 0/0.
  double Ratio(double t) const;
  double RawPower(double t) const;

 private:
  int N_;
  int M_;
  double gamma_ = 0.0;
  double raw_mass_ = 0.0;
};

// Shared cache of kernels by N.
const JacksonKernel& KernelFor(int N);

// (L_N f)(x) = int_{-pi}^{pi} f(x - t) J_N(t) dt for 2pi-periodic f. Points
// where f is not smooth (taken mod 2pi) can be passed as `kinks` so the
// quadrature splits there.
double JacksonSmooth1D(const std::function<double(double)>& f, int N, double x,
                       std::span<const double> kinks = {},
                       const AdaptiveOptions& options = {});

// f_l(v + x) = rho_l(x) f(x) for x in the fundamental cell and v in the period
// lattice. The period is 8 l sqrt(n) rounded up to a multiple of 2^-32 so that
// lattice reduction of dyadic inputs is exact; for n = 1 (and any n that
// makes 8 l sqrt(n) dyadic) this is the exact value.
class Periodization {
 public:
  Periodization(SmoothFunction f, int ell);

  int dim() const { return f_.dim; }
  int ell() const { return ell_; }
  int max_order() const { return f_.max_order; }
  double period() const { return period_; }
  // lambda = period / (2 pi) (= 4 l sqrt(n) / pi).
  double scale() const { return period_ / (2.0 * kPi); }
  const SmoothFunction& source() const { return f_; }
  const CutoffFamily& cutoff() const { return cutoff_; }

  // Representative of x in the fundamental cell [-P/2, P/2]^n.
  Point Reduce(std::span<const double> x) const;
  double operator()(std::span<const double> x) const;
  // D^alpha f_l(x) by the Leibniz rule on rho_l * f.
  double Derivative(std::span<const double> x, const MultiIndex& alpha) const;
  // f_l as a SmoothFunction (same max_order as f).
  SmoothFunction AsFunction() const;

  static constexpr double kPi = 3.14159265358979323846;

 private:
  SmoothFunction f_;
  int ell_;
  double period_;
  CutoffFamily cutoff_;
};

struct SmoothingOptions {
  // Defaults per dimension are chosen by DefaultFor(n).
  AdaptiveOptions quadrature;
  static SmoothingOptions DefaultFor(int n);
};

// E_N g(x) = int_{[-pi,pi]^n} g(x - lambda t) J_N(t_1)...J_N(t_n) dt applied to
// g = D^alpha f_l. Tensor quadrature is limited to n <= 3.
class SmoothingOperator {
 public:
  SmoothingOperator(Periodization source, int N, std::optional<SmoothingOptions> options = {});

  int N() const { return N_; }
  const Periodization& source() const { return source_; }

  // D^alpha E_N f_l (x) = E_N (D^alpha f_l)(x).
  double Evaluate(std::span<const double> x, const MultiIndex& alpha) const;
  double operator()(std::span<const double> x) const {
    return Evaluate(x, MultiIndex::Zero(source_.dim()));
  }
  std::vector<double> EvaluateBatch(std::span<const Point> points, const MultiIndex& alpha,
                                    Execution exec = Execution::kParallel) const;

 private:
  double Integrate(int axis, std::span<const double> x, Point& arg, const MultiIndex& alpha) const;

  Periodization source_;
  int N_;
  const JacksonKernel* kernel_;
  SmoothingOptions options_;
};

// The finite-rank operator L_{N,l} f = E_N f_l. With l = N this is the
// diagonal operator L_{NN}.
double ApplyFiniteRank(const SmoothFunction& f, int N, int ell, std::span<const double> x,
                       const MultiIndex& alpha);
double FiniteRankLNN(const SmoothFunction& f, int N, std::span<const double> x,
                     const MultiIndex& alpha);

struct DerivativeError {
  MultiIndex alpha;
  double empirical_sup_error = 0.0;  // max over the grid of |D^a (f_l - E_N f_l)|
};

struct ApproxReport {
  int N = 0;
  int ell = 0;
  int k = 0;
  int n = 1;
  std::size_t grid_size = 0;
  std::size_t pair_count = 0;
  double period = 0.0;
  double scale = 0.0;

  NormEstimate norm_f;
  NormEstimate norm_f_ell;
  NormEstimate norm_smoothed;
  NormEstimate norm_error;

  double empirical_C_ell = 0.0;         // ||f_l|| / ||f||
  double empirical_smoothed_ratio = 0.0;  // ||E_N f_l|| / ||f||
  double empirical_c_N = 0.0;           // ||f_l - E_N f_l|| / ||f||
  double rate_shape = 0.0;              // max(1/N, omega(1/N))
  double empirical_fitted_c = 0.0;      // c_N / (n * C_l * rate_shape)
  std::vector<DerivativeError> derivative_errors;

  // Rescaled operator T_N = scale_factor * L / C_N with the empirical C_N.
  double empirical_cutoff_constant = 0.0;   // c_{k,n} for our cutoff
  double limit_reciprocal_omega = 0.0;      // 1/omega(probe)
  double omega_limit_probe = 0.0;
  double rescale_numerator = 0.0;           // 1 + c_{k,n} 4 sqrt(n) (k+1) lim 1/omega
  double rescale_factor = 0.0;              // numerator / empirical_C_ell
};

// Compares f, f_l, E_N f_l on a grid inside the fundamental cell (all pairs of
// grid points enter the seminorm). f = 0 gives all ratios 0.
ApproxReport ErrorReport(const SmoothFunction& f, int ell, int N, const NormContext& ctx,
                         std::span<const Point> grid, Execution exec = Execution::kParallel,
                         double omega_limit_probe = 1e12);

enum class WeakStarVerdict { kConverges, kUnboundedNorms, kNoPointwiseLimit };
const char* VerdictName(WeakStarVerdict v);

struct WeakStarOptions {
  double norm_cap = 10.0;
  double tolerance = 1e-2;
  // Fraction of the sequence (from the end) used for the tail checks.
  double tail_fraction = 0.5;
};

struct WeakStarReport {
  WeakStarVerdict verdict = WeakStarVerdict::kConverges;
  std::vector<double> norms;        // sampled norm of each term
  double max_norm = 0.0;
  std::size_t max_norm_index = 0;
  double max_tail_deviation = 0.0;  // against the limit, or tail spread
  std::size_t worst_probe = 0;
  MultiIndex worst_alpha;
  std::string detail;
};

// Checks (a) boundedness of the sampled C^{k,omega} norms by norm_cap and
// (b) convergence of D^alpha f_i(x) at the probes for |alpha| <= k: with a
// limit, every tail term must lie within tolerance of it; otherwise the tail
// spread (max - min) must be below tolerance.
WeakStarReport WeakStarCheck(std::span<const SmoothFunction> sequence, const NormContext& ctx,
                             std::span<const Point> probes, std::span<const Point> norm_grid,
                             const WeakStarOptions& options = {},
                             const SmoothFunction* limit = nullptr,
                             Execution exec = Execution::kParallel);

}  // namespace ckw

#endif  // CKW_JACKSON_HPP_
