// Copyright 2026 The Authors.
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


#include "maskopt/decoders.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "maskopt/error.hpp"
#include "maskopt/wavelet.hpp"

namespace maskopt {

std::string_view to_string(DecoderKind kind) {
  switch (kind) {
    case DecoderKind::zero_fill:
      return "zero_fill";
    case DecoderKind::bp:
      return "bp";
    case DecoderKind::tv:
      return "tv";
  }
  return "?";
}

DecoderKind parse_decoder_kind(std::string_view name) {
  if (name == "zero_fill") return DecoderKind::zero_fill;
  if (name == "bp") return DecoderKind::bp;
  if (name == "tv") return DecoderKind::tv;
  throw InvalidArgument("unknown decoder '" + std::string(name) + "'");
}

DecoderConfig DecoderConfig::test_profile(DecoderKind kind) {
  DecoderConfig cfg;
  cfg.kind = kind;
  cfg.max_iters = 300;
  return cfg;
}

void DecoderConfig::validate() const {
  if (max_iters < 1) throw InvalidArgument("decoder max_iters must be >= 1");
  if (kind != DecoderKind::zero_fill && !(lambda > 0.0)) {
    throw InvalidArgument("decoder lambda must be positive");
  }
  if (!(epsilon >= 0.0)) throw InvalidArgument("decoder epsilon must be nonnegative");
  if (!(tol >= 0.0)) throw InvalidArgument("decoder tol must be nonnegative");
  if (tv_inner_iters < 1) throw InvalidArgument("tv inner iterations must be >= 1");
}

namespace {

// ---------------------------------------------------------------------------
// Finite differences for TV. grad: forward differences, zero across the last
// row/column. div = -grad^*.

void gradient(std::span<const Complex> u, Shape s, std::span<Complex> gy, std::span<Complex> gx) {
  for (std::size_t r = 0; r < s.rows; ++r) {
    for (std::size_t c = 0; c < s.cols; ++c) {
      const std::size_t i = r * s.cols + c;
      gy[i] = r + 1 < s.rows ? u[i + s.cols] - u[i] : Complex{};
      gx[i] = c + 1 < s.cols ? u[i + 1] - u[i] : Complex{};
    }
  }
}

void divergence(std::span<const Complex> py, std::span<const Complex> px, Shape s,
                std::span<Complex> out) {
  for (std::size_t r = 0; r < s.rows; ++r) {
    for (std::size_t c = 0; c < s.cols; ++c) {
      const std::size_t i = r * s.cols + c;
      Complex d{};
      if (r + 1 < s.rows) d += py[i];
      if (r > 0) d -= py[i - s.cols];
      if (c + 1 < s.cols) d += px[i];
      if (c > 0) d -= px[i - 1];
      out[i] = d;
    }
  }
}

// Chambolle's projection iteration with a persistent dual variable so that
// repeated calls inside the outer solver warm start.
class TvProx {
 public:
  explicit TvProx(Shape shape)
      : shape_(shape),
        py_(shape.size()),
        px_(shape.size()),
        div_(shape.size()),
        gy_(shape.size()),
        gx_(shape.size()) {}

  void apply(std::span<const Complex> g, double lambda, int iterations, std::span<Complex> out) {
    constexpr double kStep = 0.125;
    const std::size_t p = shape_.size();
    for (int it = 0; it < iterations; ++it) {
      divergence(py_, px_, shape_, div_);
      for (std::size_t i = 0; i < p; ++i) div_[i] -= g[i] / lambda;
      gradient(div_, shape_, gy_, gx_);
      for (std::size_t i = 0; i < p; ++i) {
        const double mag = std::sqrt(std::norm(gy_[i]) + std::norm(gx_[i]));
        const double denom = 1.0 + kStep * mag;
        py_[i] = (py_[i] + kStep * gy_[i]) / denom;
        px_[i] = (px_[i] + kStep * gx_[i]) / denom;
      }
    }
    divergence(py_, px_, shape_, div_);
    for (std::size_t i = 0; i < p; ++i) out[i] = g[i] - lambda * div_[i];
  }

 private:
  Shape shape_;
  std::vector<Complex> py_, px_, div_, gy_, gx_;
};

// sqrt(norm) rather than std::abs: hypot dominates the iteration cost otherwise.
void soft_threshold(std::span<const Complex> v, double tau, std::span<Complex> out) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double mag = std::sqrt(std::norm(v[i]));
    out[i] = mag > tau ? v[i] * ((mag - tau) / mag) : Complex{};
  }
}

double l1_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::sqrt(std::norm(z));
  return s;
}

double half_residual_sq(std::span<const Complex> ax, std::span<const Complex> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) s += std::norm(ax[i] - b[i]);
  return 0.5 * s;
}

// Composite problem  lambda R(v) + 0.5 ||M v - b||^2  over a variable v,
// where the image is synthesize(v). For bp v holds Haar coefficients; for tv
// v is the image itself.
class Problem {
 public:
  Problem(const DecoderConfig& cfg, Shape shape, std::vector<std::size_t> indices)
      : cfg_(cfg),
        shape_(shape),
        op_(shape, std::move(indices)),
        buffer_(shape.size()) {
    if (cfg.kind == DecoderKind::bp) {
      const int levels = cfg.wavelet_levels < 0 ? HaarTransform::default_levels(shape)
                                                : cfg.wavelet_levels;
      haar_ = std::make_unique<HaarTransform>(shape, levels);
    } else {
      tv_ = std::make_unique<TvProx>(shape);
    }
  }

  std::size_t dim() const { return shape_.size(); }
  std::size_t measurements() const { return op_.measurement_count(); }

  void forward(std::span<const Complex> v, std::span<Complex> out) {
    if (haar_) {
      std::copy(v.begin(), v.end(), buffer_.begin());
      haar_->inverse(buffer_);
      op_.apply(buffer_, out);
    } else {
      op_.apply(v, out);
    }
  }

  void adjoint(std::span<const Complex> y, std::span<Complex> out) {
    op_.adjoint(y, out);
    if (haar_) haar_->forward(out);
  }

  void prox(std::span<const Complex> v, double lambda, std::span<Complex> out) {
    if (haar_) {
      soft_threshold(v, lambda, out);
    } else {
      tv_->apply(v, lambda, cfg_.tv_inner_iters, out);
    }
  }

  double regularizer(std::span<const Complex> v) const {
    return haar_ ? l1_norm(v) : total_variation(v, shape_);
  }

  void synthesize(std::span<Complex> v) const {
    if (haar_) haar_->inverse(v);
  }

 private:
  const DecoderConfig& cfg_;
  Shape shape_;
  SubsampledFourier op_;
  std::unique_ptr<HaarTransform> haar_;
  std::unique_ptr<TvProx> tv_;
  std::vector<Complex> buffer_;
};

void check_inputs(const DecoderConfig& cfg, const SamplingPattern& pattern,
                  const Measurements& b) {
  cfg.validate();
  if (b.shape != pattern.shape()) throw InvalidArgument("measurement shape does not match pattern");
  if (b.values.size() != pattern.count() || b.indices.size() != pattern.count()) {
    throw InvalidArgument("measurement count does not match the sampling pattern");
  }
  require_power_of_two(b.shape);
}

// Monotone FISTA (Beck & Teboulle): the kept iterate only moves when the
// proximal step lowers the objective, so the objective trace never increases
// while the momentum sequence still uses the trial point.
ComplexImage solve(const DecoderConfig& cfg, const SamplingPattern&,
                   const Measurements& b, DecodeReport* report) {
  Problem prob(cfg, b.shape, b.indices);
  const std::size_t n = prob.dim();
  const std::size_t nm = prob.measurements();
  std::span<const Complex> bv = b.values;

  std::vector<Complex> x(n), x_prev(n), y(n), z(n), v(n), grad(n);
  std::vector<Complex> ax(nm), ax_prev(nm), ay(nm), az(nm), r(nm);

  const bool noisy = cfg.epsilon > 0.0;
  double lambda = cfg.lambda;
  if (noisy) {
    // Start from zero with a weight large enough to zero out the first step.
    prob.adjoint(bv, grad);
    double peak = 0.0;
    for (const Complex& g : grad) peak = std::max(peak, std::abs(g));
    lambda = std::max(cfg.lambda, peak);
  } else {
    prob.adjoint(bv, x);  // A^* b, i.e. the zero-filled start
  }
  prob.forward(x, ax);
  double reg_x = prob.regularizer(x);
  double data_x = half_residual_sq(ax, bv);
  double f_x = lambda * reg_x + data_x;

  x_prev = x;
  ax_prev = ax;
  y = x;
  ay = ax;
  double t = 1.0;
  bool converged = false;
  int iterations = 0;
  std::vector<double> trace;

  for (int k = 0; k < cfg.max_iters; ++k) {
    for (std::size_t i = 0; i < nm; ++i) r[i] = ay[i] - bv[i];
    prob.adjoint(r, grad);
    for (std::size_t i = 0; i < n; ++i) v[i] = y[i] - grad[i];
    prob.prox(v, lambda, z);
    prob.forward(z, az);
    const double reg_z = prob.regularizer(z);
    const double data_z = half_residual_sq(az, bv);
    const double f_z = lambda * reg_z + data_z;

    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    const bool accepted = f_z <= f_x;
    const double f_before = f_x;

    // x_prev <- x, x <- accepted ? z : x
    x_prev.swap(x);
    ax_prev.swap(ax);
    if (accepted) {
      x = z;
      ax = az;
      reg_x = reg_z;
      data_x = data_z;
      f_x = f_z;
    } else {
      x = x_prev;
      ax = ax_prev;
    }
    const double a = t / t_next;
    const double c = (t - 1.0) / t_next;
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + a * (z[i] - x[i]) + c * (x[i] - x_prev[i]);
    for (std::size_t i = 0; i < nm; ++i) {
      ay[i] = ax[i] + a * (az[i] - ax[i]) + c * (ax[i] - ax_prev[i]);
    }
    t = t_next;
    iterations = k + 1;
    if (report) trace.push_back(f_x);

    if (noisy) {
      if (std::sqrt(2.0 * data_x) <= cfg.epsilon) {
        converged = true;
        break;
      }
      lambda = std::max(cfg.lambda, 0.9 * lambda);
      f_x = lambda * reg_x + data_x;
    } else if (accepted && std::abs(f_before - f_x) <= cfg.tol * std::abs(f_before)) {
      converged = true;
      break;
    }
  }

  if (report) {
    report->iterations = iterations;
    report->objective = f_x;
    report->residual = std::sqrt(2.0 * data_x);
    report->converged = converged;
    report->objective_trace = std::move(trace);
  }
  prob.synthesize(x);
  return ComplexImage(b.shape, std::move(x));
}

}  // namespace

double total_variation(std::span<const Complex> x, Shape shape) {
  double tv = 0.0;
  for (std::size_t r = 0; r < shape.rows; ++r) {
    for (std::size_t c = 0; c < shape.cols; ++c) {
      const std::size_t i = r * shape.cols + c;
      const Complex dy = r + 1 < shape.rows ? x[i + shape.cols] - x[i] : Complex{};
      const Complex dx = c + 1 < shape.cols ? x[i + 1] - x[i] : Complex{};
      tv += std::sqrt(std::norm(dy) + std::norm(dx));
    }
  }
  return tv;
}

ComplexImage tv_denoise(const ComplexImage& g, double lambda, int iterations) {
  if (!(lambda > 0.0)) throw InvalidArgument("TV weight must be positive");
  TvProx prox(g.shape());
  ComplexImage out(g.shape());
  prox.apply(g.data(), lambda, iterations, out.data());
  return out;
}

ComplexImage decode(const DecoderConfig& cfg, const SamplingPattern& pattern,
                    const Measurements& b, DecodeReport* report) {
  check_inputs(cfg, pattern, b);
  if (cfg.kind == DecoderKind::zero_fill) {
    ComplexImage x = adjoint_zero_fill(b);
    if (report) {
      *report = DecodeReport{};
      report->converged = true;
      report->residual = std::sqrt(2.0 * half_residual_sq(subsample(fft2_unitary(x), pattern).values,
                                                          b.values));
      report->objective = 0.5 * report->residual * report->residual;
    }
    return x;
  }
  return solve(cfg, pattern, b, report);
}

double objective(const DecoderConfig& cfg, const SamplingPattern& pattern, const Measurements& b,
                 const ComplexImage& x) {
  check_inputs(cfg, pattern, b);
  if (x.shape() != b.shape) throw InvalidArgument("image shape does not match measurements");
  const double data = half_residual_sq(subsample(fft2_unitary(x), pattern).values, b.values);
  switch (cfg.kind) {
    case DecoderKind::zero_fill:
      return data;
    case DecoderKind::bp: {
      const int levels = cfg.wavelet_levels < 0 ? HaarTransform::default_levels(x.shape())
                                                : cfg.wavelet_levels;
      std::vector<Complex> coeffs(x.data().begin(), x.data().end());
      HaarTransform(x.shape(), levels).forward(coeffs);
      return cfg.lambda * l1_norm(coeffs) + data;
    }
    case DecoderKind::tv:
      return cfg.lambda * total_variation(x.data(), x.shape()) + data;
  }
  return data;
}

}  // namespace maskopt
