#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tutorkit::stats {

class DegenerateSampleError : public std::runtime_error {
 public:
  explicit DegenerateSampleError(const std::string& what)
      : std::runtime_error(what) {}
};

class RankDeficientError : public std::runtime_error {
 public:
  explicit RankDeficientError(const std::string& what)
      : std::runtime_error(what) {}
};

// Dense row-major matrix, sized for design matrices with tens of columns.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

  double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

double log_gamma(double x);
// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double reg_incomplete_beta(double a, double b, double x);
double normal_cdf(double z);
double normal_quantile(double p);
double t_cdf(double t, double df);
double f_cdf(double f, double df1, double df2);

double mean(std::span<const double> xs);
double sample_variance(std::span<const double> xs);
double sample_sd(std::span<const double> xs);
double median(std::vector<double> xs);

struct MeanCi {
  double mean = 0.0;
  double half_width = 0.0;
  int n = 0;
};
// t-interval for the mean at the given two-sided confidence level.
MeanCi mean_ci(std::span<const double> xs, double level = 0.95);

enum class Tail { two_sided, greater, less };

struct WelchResult {
  double mean_a = 0.0;
  double mean_b = 0.0;
  double se = 0.0;  // sqrt(va/na + vb/nb)
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;
};
// Unequal-variance t test of mean(a) vs mean(b); `greater` tests mean_a > mean_b.
WelchResult welch_t_test(std::span<const double> a, std::span<const double> b,
                         Tail tail = Tail::two_sided);
// Same test from sufficient statistics (sample variances, not SEs).
WelchResult welch_t_from_summary(double mean_a, double var_a, int n_a,
                                 double mean_b, double var_b, int n_b,
                                 Tail tail = Tail::two_sided);

struct AnovaResult {
  double f = 0.0;
  double df_between = 0.0;
  double df_within = 0.0;
  double p = 1.0;
};
AnovaResult one_way_anova(const std::vector<std::vector<double>>& groups);

struct FitResult {
  std::vector<double> beta;
  std::vector<double> se;
  std::vector<double> p;  // two-sided per coefficient
  bool converged = true;
  int iterations = 0;
  double df_residual = 0.0;
};

// Least squares via the normal equations; p-values from t(n - k).
FitResult ols(const Matrix& x, std::span<const double> y);

// Logistic regression by Newton iterations; p-values from the normal Wald
// statistic. Separation is reported through converged=false with coefficients
// clamped to +-15 rather than thrown, so callers can fall back.
FitResult logistic(const Matrix& x, std::span<const double> y, int max_iter = 100);

// Benjamini-Hochberg adjusted p-values (monotone step-up).
std::vector<double> bh_adjust(std::span<const double> p);
std::vector<bool> bh_reject(std::span<const double> p, double q);

// Solves a * x = b in place; throws RankDeficientError on singular systems.
std::vector<double> solve_linear(Matrix a, std::vector<double> b);
// Inverse via Gauss-Jordan with partial pivoting.
Matrix invert(Matrix a);

}  // namespace tutorkit::stats
