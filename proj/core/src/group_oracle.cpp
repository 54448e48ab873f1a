#include "symwalk/group_oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace symwalk {

Perm insertion_cycle(int i, int j, int n) {
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("insertion_cycle: position out of range");
  Perm p(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) p[static_cast<std::size_t>(k)] = k;
  if (i < j)
    for (int k = i + 1; k <= j; ++k) p[static_cast<std::size_t>(k)] = k - 1;
  else
    for (int k = j; k < i; ++k) p[static_cast<std::size_t>(k)] = k + 1;
  p[static_cast<std::size_t>(i)] = j;
  return p;
}

namespace {

Real poisson_log_weight(const Real& t, unsigned s) {
  if (t == 0) return s == 0 ? Real(0) : neg_infinity();
  return -t + Real(s) * log(t) - log_factorial(s);
}

}  // namespace

std::vector<ContinuousLaw> continuous_laws(const GroupDistribution& q,
                                           const SymmetricGroup& g,
                                           const std::vector<Real>& times,
                                           const Real& tail_tol) {
  detail::guard_oracle_degree<Real>(g.n());
  if (tail_tol <= 0) throw std::invalid_argument("tail tolerance must be positive");
  std::vector<ContinuousLaw> out(times.size());
  std::vector<bool> done(times.size(), false);
  std::vector<Real> kept(times.size(), Real(0));
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0) throw std::invalid_argument("continuous time must be >= 0");
    out[i].law = {g.n(), std::vector<Real>(g.order(), Real(0))};
  }

  const ConvolutionOperator<Real> op(q, g);
  std::vector<Real> power = point_mass<Real>(g).values;
  std::size_t remaining = times.size();
  for (unsigned s = 0; remaining > 0; ++s) {
    if (s > 0) power = op.convolve(power);
    for (std::size_t i = 0; i < times.size(); ++i) {
      if (done[i]) continue;
      const Real w = exp(poisson_log_weight(times[i], s));
      auto& law = out[i].law.values;
      for (std::size_t x = 0; x < law.size(); ++x) law[x] += w * power[x];
      kept[i] += w;
      // Past the mode the tail only shrinks, so 1 - kept is the tail mass.
      if (1 - kept[i] < tail_tol && Real(s) >= times[i]) {
        done[i] = true;
        --remaining;
        out[i].truncation = s;
        out[i].omitted_mass = std::max(Real(0), Real(1 - kept[i]));
      }
    }
  }
  return out;
}

ContinuousLaw continuous_law(const GroupDistribution& q, const SymmetricGroup& g,
                             const Real& t, const Real& tail_tol) {
  return continuous_laws(q, g, {t}, tail_tol).front();
}

GroupFunction constant_function(const SymmetricGroup& g, const Real& value) {
  return {g.n(), std::vector<Real>(g.order(), value)};
}

GroupFunction fixed_point_function(const SymmetricGroup& g) {
  GroupFunction f{g.n(), std::vector<Real>(g.order())};
  for (std::size_t x = 0; x < g.order(); ++x)
    f.values[x] = fixed_points(g.element(x)) - 1;
  return f;
}

GroupFunction ttr_eigenfunction(const SymmetricGroup& g) {
  const int n = g.n();
  if (n < 3) throw std::invalid_argument("ttr_eigenfunction needs n >= 3");
  const Real scale = sqrt(Real(n - 1) / Real(n - 2));
  GroupFunction f{n, std::vector<Real>(g.order())};
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Perm p = g.element(x);
    const Real phi = fixed_points(p);
    f.values[x] = scale * (p[0] == 0 ? Real(phi - 2) : Real(phi - 1 + Real(1) / (n - 1)));
  }
  return f;
}

namespace {

long long position_weighted_sum(const Perm& p) {
  long long s = 0;
  for (std::size_t j = 0; j < p.size(); ++j) s += static_cast<long long>(p[j]) * static_cast<long long>(j);
  return s;
}

}  // namespace

GroupFunction ri_wilson_function(const SymmetricGroup& g) {
  const int n = g.n();
  if (n < 2) throw std::invalid_argument("ri_wilson_function needs n >= 2");
  const Real c = Real(4) / (Real(n - 1) * (n - 1));
  GroupFunction f{n, std::vector<Real>(g.order())};
  for (std::size_t x = 0; x < g.order(); ++x)
    f.values[x] = -Real(n) + c * Real(position_weighted_sum(g.element(x)));
  return f;
}

Rational ri_wilson_square_sum_exact(int n) {
  const SymmetricGroup g(n);
  if (n < 2) throw std::invalid_argument("ri_wilson_square_sum_exact needs n >= 2");
  const Rational c(4, (n - 1) * (n - 1));
  Rational sum = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Rational v = Rational(-n) + c * Rational(position_weighted_sum(g.element(x)));
    sum += v * v;
  }
  return sum;
}

Real eigenfunction_residual(const GroupFunction& f, const GroupDistribution& q,
                            const SymmetricGroup& g, const Real& beta) {
  if (f.n != g.n() || q.n != g.n())
    throw std::invalid_argument("eigenfunction_residual: degree mismatch");
  const ConvolutionOperator<Real> op(q, g);
  const std::vector<Real> conv = op.convolve(f.values);
  Real worst = 0;
  for (std::size_t x = 0; x < conv.size(); ++x)
    worst = std::max(worst, Real(abs(conv[x] - beta * f.values[x])));
  return worst;
}

namespace {

// ½ Σ_s q(s) (f(x) - f(x s))² at each x.
std::vector<Real> square_gradient(const GroupFunction& f, const GroupDistribution& q,
                                  const SymmetricGroup& g) {
  if (f.n != g.n() || q.n != g.n())
    throw std::invalid_argument("square gradient: degree mismatch");
  const ConvolutionOperator<Real> op(q, g);
  std::vector<Real> grad(g.order(), Real(0));
  parallel_for(g.order(), [&](std::size_t x) {
    Real acc = 0;
    for (std::size_t k = 0; k < op.support_size(); ++k) {
      const Real diff = f.values[x] - f.values[op.times(k)[x]];
      acc += op.weights()[k] * diff * diff;
    }
    grad[x] = acc / 2;
  });
  return grad;
}

void guard_dense(int n) {
  if (n > kMaxDenseDegree)
    throw ResourceLimitError("dense eigenproblems are limited to n <= " +
                             std::to_string(kMaxDenseDegree));
}

Eigen::MatrixXd kernel_matrix(const GroupDistribution& q, const SymmetricGroup& g) {
  guard_dense(g.n());
  const ConvolutionOperator<Real> op(q, g);
  const auto size = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(size, size);
  for (std::size_t s = 0; s < op.support_size(); ++s) {
    const double w = static_cast<double>(op.weights()[s]);
    for (std::size_t x = 0; x < g.order(); ++x)
      k(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(op.times(s)[x])) += w;
  }
  if ((k - k.transpose()).cwiseAbs().maxCoeff() > 1e-14)
    throw std::invalid_argument("dense eigenproblem needs a symmetric measure");
  return k;
}

}  // namespace

Real square_gradient_sup(const GroupFunction& f, const GroupDistribution& q,
                         const SymmetricGroup& g) {
  const auto grad = square_gradient(f, q, g);
  return *std::max_element(grad.begin(), grad.end());
}

Real dirichlet_form(const GroupDistribution& q, const GroupFunction& f,
                    const SymmetricGroup& g) {
  const auto grad = square_gradient(f, q, g);
  Real sum = 0;
  for (const Real& v : grad) sum += v;
  return sum / Real(g.order());
}

double comparison_gap(const GroupDistribution& q, const GroupDistribution& qt,
                      const Real& a, const SymmetricGroup& g) {
  const Eigen::MatrixXd kq = kernel_matrix(q, g);
  const Eigen::MatrixXd kqt = kernel_matrix(qt, g);
  const auto size = kq.rows();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(size, size);
  const Eigen::MatrixXd form = static_cast<double>(a) * (id - kq) - (id - kqt);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(form, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

std::vector<double> operator_eigenvalues(const GroupDistribution& q,
                                         const SymmetricGroup& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(kernel_matrix(q, g),
                                                        Eigen::EigenvaluesOnly);
  std::vector<double> vals(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(vals.begin(), vals.end(), std::greater<>());
  return vals;
}

Real l2_from_eigenvalues(const std::vector<double>& eigenvalues, const Real& t,
                         bool continuous) {
  if (eigenvalues.empty()) return 0;
  Real sum = 0;
  // Index 0 is the stationary eigenvalue 1 (list is descending).
  for (std::size_t i = 1; i < eigenvalues.size(); ++i) {
    const Real b = eigenvalues[i];
    if (continuous)
      sum += exp(-2 * t * (1 - b));
    else if (t == 0)
      sum += 1;
    else
      sum += pow(b * b, t);
  }
  return sqrt(sum);
}

}  // namespace symwalk
