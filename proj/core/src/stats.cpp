#include "tutorkit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tutorkit::stats {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Continued fraction for the incomplete beta (modified Lentz).
double beta_cf(double a, double b, double x) {
  constexpr int max_iter = 300;
  constexpr double eps = 3e-16;
  constexpr double fpmin = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < fpmin) d = fpmin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= max_iter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) break;
  }
  return h;
}

double two_sided_from_t(double t, double df) {
  const double lo = t_cdf(-std::fabs(t), df);
  return std::min(1.0, 2.0 * lo);
}

double tail_p_from_t(double t, double df, Tail tail) {
  switch (tail) {
    case Tail::two_sided: return two_sided_from_t(t, df);
    case Tail::greater: return 1.0 - t_cdf(t, df);
    case Tail::less: return t_cdf(t, df);
  }
  return 1.0;
}

// Student t quantile by bisection on the cdf; only used for CI half-widths.
double t_quantile(double p, double df) {
  double lo = -1e3, hi = 1e3;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (t_cdf(mid, df) < p) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double log_gamma(double x) {
  // Lanczos approximation, g = 7, nine coefficients.
  static const double coeff[9] = {
      0.99999999999980993,       676.5203681218851,     -1259.1392167224028,
      771.32342877765313,        -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,      9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    // Reflection keeps the small-argument branch accurate.
    return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
  }
  x -= 1.0;
  double acc = coeff[0];
  const double t = x + 7.5;
  for (int i = 1; i < 9; ++i) acc += coeff[i] / (x + i);
  return 0.5 * std::log(2.0 * kPi) + (x + 0.5) * std::log(t) - t + std::log(acc);
}

double reg_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("incomplete beta needs positive shape parameters");
  }
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = log_gamma(a + b) - log_gamma(a) - log_gamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_cf(a, b, x) / a;
  }
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double normal_quantile(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::invalid_argument("normal quantile needs p in (0,1)");
  }
  // Rational approximation (Acklam), then one Halley step against erfc.
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;
  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double e = normal_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * kPi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

double t_cdf(double t, double df) {
  if (!(df > 0.0)) throw std::invalid_argument("t cdf needs df > 0");
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  const double x = df / (df + t * t);
  const double half_tail = 0.5 * reg_incomplete_beta(0.5 * df, 0.5, x);
  return t >= 0.0 ? 1.0 - half_tail : half_tail;
}

double f_cdf(double f, double df1, double df2) {
  if (!(df1 > 0.0) || !(df2 > 0.0)) throw std::invalid_argument("f cdf needs positive df");
  if (f <= 0.0) return 0.0;
  const double x = df1 * f / (df1 * f + df2);
  return reg_incomplete_beta(0.5 * df1, 0.5 * df2, x);
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw DegenerateSampleError("mean of empty sample");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
  if (xs.size() < 2) throw DegenerateSampleError("variance needs n >= 2");
  const double m = mean(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - m) * (x - m);
  return acc / static_cast<double>(xs.size() - 1);
}

double sample_sd(std::span<const double> xs) { return std::sqrt(sample_variance(xs)); }

double median(std::vector<double> xs) {
  if (xs.empty()) throw DegenerateSampleError("median of empty sample");
  const size_t mid = xs.size() / 2;
  std::nth_element(xs.begin(), xs.begin() + mid, xs.end());
  double hi = xs[mid];
  if (xs.size() % 2 == 1) return hi;
  const double lo = *std::max_element(xs.begin(), xs.begin() + mid);
  return 0.5 * (lo + hi);
}

MeanCi mean_ci(std::span<const double> xs, double level) {
  MeanCi out;
  out.n = static_cast<int>(xs.size());
  if (xs.empty()) throw DegenerateSampleError("interval of empty sample");
  out.mean = mean(xs);
  if (xs.size() < 2) {
    out.half_width = std::numeric_limits<double>::infinity();
    return out;
  }
  const double sd = sample_sd(xs);
  const double df = static_cast<double>(xs.size() - 1);
  const double crit = t_quantile(0.5 + 0.5 * level, df);
  out.half_width = crit * sd / std::sqrt(static_cast<double>(xs.size()));
  return out;
}

WelchResult welch_t_test(std::span<const double> a, std::span<const double> b,
                         Tail tail) {
  if (a.size() < 2 || b.size() < 2) {
    throw DegenerateSampleError("welch test needs n >= 2 per group");
  }
  return welch_t_from_summary(mean(a), sample_variance(a), static_cast<int>(a.size()),
                              mean(b), sample_variance(b), static_cast<int>(b.size()),
                              tail);
}

WelchResult welch_t_from_summary(double mean_a, double var_a, int n_a,
                                 double mean_b, double var_b, int n_b, Tail tail) {
  if (n_a < 2 || n_b < 2) throw DegenerateSampleError("welch test needs n >= 2 per group");
  WelchResult r;
  r.mean_a = mean_a;
  r.mean_b = mean_b;
  const double va = var_a / n_a;
  const double vb = var_b / n_b;
  if (va + vb <= 0.0) {
    throw DegenerateSampleError("welch test with zero variance in both groups");
  }
  r.se = std::sqrt(va + vb);
  r.t = (mean_a - mean_b) / r.se;
  r.df = (va + vb) * (va + vb) / (va * va / (n_a - 1.0) + vb * vb / (n_b - 1.0));
  r.p = tail_p_from_t(r.t, r.df, tail);
  return r;
}

AnovaResult one_way_anova(const std::vector<std::vector<double>>& groups) {
  if (groups.size() < 2) throw DegenerateSampleError("anova needs >= 2 groups");
  size_t total_n = 0;
  double grand_sum = 0.0;
  for (const auto& g : groups) {
    if (g.size() < 2) throw DegenerateSampleError("anova group with n < 2");
    total_n += g.size();
    grand_sum += std::accumulate(g.begin(), g.end(), 0.0);
  }
  const double grand_mean = grand_sum / static_cast<double>(total_n);
  double ss_between = 0.0, ss_within = 0.0;
  for (const auto& g : groups) {
    const double gm = mean(g);
    ss_between += static_cast<double>(g.size()) * (gm - grand_mean) * (gm - grand_mean);
    for (double x : g) ss_within += (x - gm) * (x - gm);
  }
  AnovaResult out;
  out.df_between = static_cast<double>(groups.size() - 1);
  out.df_within = static_cast<double>(total_n - groups.size());
  if (ss_within <= 0.0) throw DegenerateSampleError("anova with zero within-group variance");
  out.f = (ss_between / out.df_between) / (ss_within / out.df_within);
  out.p = 1.0 - f_cdf(out.f, out.df_between, out.df_within);
  return out;
}

std::vector<double> solve_linear(Matrix a, std::vector<double> b) {
  const int n = a.rows;
  if (a.cols != n || static_cast<int>(b.size()) != n) {
    throw std::invalid_argument("solve_linear needs a square system");
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(a.at(r, col)) > std::fabs(a.at(pivot, col))) pivot = r;
    }
    if (std::fabs(a.at(pivot, col)) < 1e-12) {
      throw RankDeficientError("singular system at column " + std::to_string(col));
    }
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(col, c));
      std::swap(b[pivot], b[col]);
    }
    const double inv = 1.0 / a.at(col, col);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = a.at(r, col) * inv;
      if (factor == 0.0) continue;
      for (int c = col; c < n; ++c) a.at(r, c) -= factor * a.at(col, c);
      b[r] -= factor * b[col];
    }
    for (int c = col; c < n; ++c) a.at(col, c) *= inv;
    b[col] *= inv;
  }
  return b;
}

Matrix invert(Matrix a) {
  const int n = a.rows;
  if (a.cols != n) throw std::invalid_argument("invert needs a square matrix");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i) inv.at(i, i) = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(a.at(r, col)) > std::fabs(a.at(pivot, col))) pivot = r;
    }
    if (std::fabs(a.at(pivot, col)) < 1e-12) {
      throw RankDeficientError("singular matrix at column " + std::to_string(col));
    }
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a.at(pivot, c), a.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    const double scale = 1.0 / a.at(col, col);
    for (int c = 0; c < n; ++c) {
      a.at(col, c) *= scale;
      inv.at(col, c) *= scale;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = a.at(r, col);
      if (factor == 0.0) continue;
      for (int c = 0; c < n; ++c) {
        a.at(r, c) -= factor * a.at(col, c);
        inv.at(r, c) -= factor * inv.at(col, c);
      }
    }
  }
  return inv;
}

FitResult ols(const Matrix& x, std::span<const double> y) {
  const int n = x.rows;
  const int k = x.cols;
  if (static_cast<int>(y.size()) != n) throw std::invalid_argument("ols size mismatch");
  if (n <= k) throw DegenerateSampleError("ols needs n > k");

  Matrix xtx(k, k);
  std::vector<double> xty(k, 0.0);
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i < k; ++i) {
      const double xi = x.at(r, i);
      xty[i] += xi * y[r];
      for (int j = i; j < k; ++j) xtx.at(i, j) += xi * x.at(r, j);
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < i; ++j) xtx.at(i, j) = xtx.at(j, i);

  const Matrix xtx_inv = invert(xtx);
  FitResult fit;
  fit.beta.assign(k, 0.0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) fit.beta[i] += xtx_inv.at(i, j) * xty[j];

  double rss = 0.0;
  for (int r = 0; r < n; ++r) {
    double pred = 0.0;
    for (int j = 0; j < k; ++j) pred += x.at(r, j) * fit.beta[j];
    rss += (y[r] - pred) * (y[r] - pred);
  }
  fit.df_residual = static_cast<double>(n - k);
  const double s2 = rss / fit.df_residual;
  fit.se.resize(k);
  fit.p.resize(k);
  for (int j = 0; j < k; ++j) {
    fit.se[j] = std::sqrt(s2 * xtx_inv.at(j, j));
    const double t = fit.se[j] > 0.0 ? fit.beta[j] / fit.se[j]
                                     : std::numeric_limits<double>::infinity();
    fit.p[j] = fit.se[j] > 0.0 ? two_sided_from_t(t, fit.df_residual) : 0.0;
  }
  fit.converged = true;
  fit.iterations = 1;
  return fit;
}

FitResult logistic(const Matrix& x, std::span<const double> y, int max_iter) {
  const int n = x.rows;
  const int k = x.cols;
  if (static_cast<int>(y.size()) != n) throw std::invalid_argument("logistic size mismatch");
  if (n <= k) throw DegenerateSampleError("logistic needs n > k");

  FitResult fit;
  fit.beta.assign(k, 0.0);
  std::vector<double> mu(n), eta(n);
  Matrix hess(k, k);
  std::vector<double> grad(k);
  constexpr double beta_cap = 15.0;

  for (int iter = 1; iter <= max_iter; ++iter) {
    fit.iterations = iter;
    std::fill(grad.begin(), grad.end(), 0.0);
    std::fill(hess.data.begin(), hess.data.end(), 0.0);
    for (int r = 0; r < n; ++r) {
      double e = 0.0;
      for (int j = 0; j < k; ++j) e += x.at(r, j) * fit.beta[j];
      eta[r] = e;
      const double m = 1.0 / (1.0 + std::exp(-e));
      mu[r] = std::clamp(m, 1e-10, 1.0 - 1e-10);
      const double w = mu[r] * (1.0 - mu[r]);
      const double resid = y[r] - mu[r];
      for (int i = 0; i < k; ++i) {
        const double xi = x.at(r, i);
        grad[i] += xi * resid;
        for (int j = i; j < k; ++j) hess.at(i, j) += w * xi * x.at(r, j);
      }
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < i; ++j) hess.at(i, j) = hess.at(j, i);

    double grad_norm = 0.0;
    for (double g : grad) grad_norm = std::max(grad_norm, std::fabs(g));
    if (grad_norm < 1e-8) {
      fit.converged = true;
      break;
    }

    std::vector<double> step = solve_linear(hess, grad);
    for (int j = 0; j < k; ++j) fit.beta[j] += step[j];

    double beta_max = 0.0;
    for (double bj : fit.beta) beta_max = std::max(beta_max, std::fabs(bj));
    if (beta_max > beta_cap) {
      // Likely separation: coefficients diverge. Clamp and report.
      for (double& bj : fit.beta) bj = std::clamp(bj, -beta_cap, beta_cap);
      fit.converged = false;
      break;
    }
    fit.converged = iter < max_iter;
  }

  // Standard errors from the information matrix at the final coefficients.
  std::fill(hess.data.begin(), hess.data.end(), 0.0);
  for (int r = 0; r < n; ++r) {
    double e = 0.0;
    for (int j = 0; j < k; ++j) e += x.at(r, j) * fit.beta[j];
    const double m = std::clamp(1.0 / (1.0 + std::exp(-e)), 1e-10, 1.0 - 1e-10);
    const double w = m * (1.0 - m);
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) hess.at(i, j) += w * x.at(r, i) * x.at(r, j);
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < i; ++j) hess.at(i, j) = hess.at(j, i);
  const Matrix cov = invert(hess);
  fit.se.resize(k);
  fit.p.resize(k);
  for (int j = 0; j < k; ++j) {
    fit.se[j] = std::sqrt(std::max(0.0, cov.at(j, j)));
    const double z = fit.se[j] > 0.0 ? fit.beta[j] / fit.se[j] : 0.0;
    fit.p[j] = std::min(1.0, 2.0 * normal_cdf(-std::fabs(z)));
  }
  fit.df_residual = static_cast<double>(n - k);
  return fit;
}

std::vector<double> bh_adjust(std::span<const double> p) {
  const int m = static_cast<int>(p.size());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return p[i] < p[j]; });
  std::vector<double> adjusted(m, 1.0);
  double running = 1.0;
  for (int rank = m; rank >= 1; --rank) {
    const int idx = order[rank - 1];
    const double value = p[idx] * static_cast<double>(m) / static_cast<double>(rank);
    running = std::min(running, std::min(1.0, value));
    adjusted[idx] = running;
  }
  return adjusted;
}

std::vector<bool> bh_reject(std::span<const double> p, double q) {
  const auto adjusted = bh_adjust(p);
  std::vector<bool> out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = adjusted[i] <= q;
  return out;
}

}  // namespace tutorkit::stats
