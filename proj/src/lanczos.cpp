#include "wordchar/lanczos.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wordchar {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

void axpy(std::vector<double>& y, double c, const std::vector<double>& x) {
  for (size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

void scale(std::vector<double>& y, double c) {
  for (double& v : y) v *= c;
}

}  // namespace

// Thick-restart Lanczos. The basis depth stays bounded: at the end of each
// cycle the extreme Ritz pairs from both ends are kept, the projected
// matrix collapses to an arrowhead (kept Ritz values plus their coupling to
// the next direction), and the chain continues from there. The edge of the
// spectrum is clustered for these graphs and needs several hundred Krylov
// steps; bounding the basis keeps reorthogonalization affordable over that
// many steps.
SpectralReport spectral_gap(const SchreierOperator& op, const SpectralOptions& opts) {
  SpectralReport report;
  report.seed = opts.seed;
  report.connected = op.connected();
  if (!report.connected)
    throw std::domain_error(
        "spectral_gap: graph is disconnected (" + std::to_string(op.component_count()) +
        " components); analyze components separately or resample");

  const size_t n = static_cast<size_t>(op.size());
  const double degree = 2.0 * op.r();

  // Deflation basis: normalized constants, plus the bipartition sign vector
  // when the graph is 2-colorable (it spans the -2r eigenspace).
  std::vector<std::vector<double>> deflate;
  deflate.emplace_back(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<int8_t> coloring;
  report.bipartite = op.bipartite(&coloring);
  if (report.bipartite) {
    std::vector<double> s(n);
    for (size_t i = 0; i < n; ++i) s[i] = coloring[i] ? -1.0 : 1.0;
    double c = dot(s, deflate[0]);
    axpy(s, -c, deflate[0]);
    double nm = norm(s);
    if (nm > 1e-12) {
      scale(s, 1.0 / nm);
      deflate.push_back(std::move(s));
    }
  }
  const size_t complement_dim = n - deflate.size();
  if (complement_dim == 0) {
    report.converged = true;
    report.lambda_nontrivial = std::nullopt;
    return report;
  }

  auto project_out = [&](std::vector<double>& v) {
    for (const auto& d : deflate) axpy(v, -dot(v, d), d);
  };

  RandomStream rs(opts.seed, 0);

  // Basis layout: kept Ritz vectors (s of them), then the processed chain.
  // `pending` is the next, not yet processed direction; `link` couples the
  // kept block to the first chain vector, consecutive chain vectors couple
  // through `beta`, and the last beta couples outward to `pending`.
  std::vector<std::vector<double>> basis;
  std::vector<double> kept_theta, link;
  std::vector<double> alpha, beta;
  std::vector<double> pending(n);
  bool have_pending = false;
  bool exhausted = false;
  long total_matvecs = 0;

  auto fresh_direction = [&](std::vector<double>& v) {
    for (int attempt = 0; attempt < 32; ++attempt) {
      for (size_t i = 0; i < n; ++i) v[i] = rs.unit_symmetric();
      project_out(v);
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) axpy(v, -dot(v, b), b);
      double nm = norm(v);
      if (nm > 1e-6) {
        scale(v, 1.0 / nm);
        return true;
      }
    }
    return false;
  };

  if (!fresh_direction(pending))
    throw std::logic_error("spectral_gap: cannot build a start vector");
  have_pending = true;

  const int depth = static_cast<int>(std::min<size_t>(complement_dim, 200));
  const int keep_per_end = std::max(2, std::min(12, depth / 6));
  const double accept = opts.tolerance * degree;

  std::vector<double> w(n);
  Eigen::MatrixXd vecs;
  Eigen::VectorXd vals;
  int cycles = 0;

  while (true) {
    // Extend the chain.
    while (have_pending && static_cast<int>(basis.size()) < depth) {
      basis.push_back(pending);
      const std::vector<double>& v = basis.back();
      const size_t s = kept_theta.size();
      const size_t j = alpha.size();  // chain index of v
      op.apply(v, w);
      ++total_matvecs;
      double a = dot(w, v);
      alpha.push_back(a);
      axpy(w, -a, v);
      if (j == 0) {
        for (size_t i = 0; i < s; ++i) axpy(w, -link[i], basis[i]);
      } else if (beta.back() != 0.0) {
        axpy(w, -beta.back(), basis[basis.size() - 2]);
      }
      project_out(w);
      double before = norm(w);
      for (const auto& b : basis) axpy(w, -dot(w, b), b);
      if (norm(w) < 0.5 * before)  // second pass only under heavy cancellation
        for (const auto& b : basis) axpy(w, -dot(w, b), b);
      double nb = norm(w);
      if (nb < 1e-10) {
        // Invariant subspace. Continue from a fresh direction when one
        // exists, otherwise the complement is fully projected.
        if (basis.size() >= complement_dim || !fresh_direction(pending)) {
          have_pending = false;
          exhausted = true;
          beta.push_back(0.0);
          break;
        }
        beta.push_back(0.0);
      } else {
        beta.push_back(nb);
        pending = w;
        scale(pending, 1.0 / nb);
      }
    }

    // Rayleigh-Ritz on the projected matrix (arrowhead + tridiagonal).
    const int m = static_cast<int>(basis.size());
    const int s = static_cast<int>(kept_theta.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < s; ++i) {
      t(i, i) = kept_theta[static_cast<size_t>(i)];
      if (s < m) t(i, s) = t(s, i) = link[static_cast<size_t>(i)];
    }
    for (size_t j = 0; j < alpha.size(); ++j) {
      int d = s + static_cast<int>(j);
      t(d, d) = alpha[j];
      if (j + 1 < alpha.size()) t(d, d + 1) = t(d + 1, d) = beta[j];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    vals = es.eigenvalues();
    vecs = es.eigenvectors();
    const double beta_out = have_pending && !beta.empty() ? beta.back() : 0.0;
    double res_top = std::abs(beta_out * vecs(m - 1, m - 1));
    double res_bottom = std::abs(beta_out * vecs(m - 1, 0));
    ++cycles;

    if (exhausted || (res_top <= accept && res_bottom <= accept) ||
        cycles >= opts.max_iterations) {
      report.iterations = static_cast<int>(total_matvecs);
      report.lambda_top = vals(m - 1);
      report.lambda_bottom = vals(0);

      auto ritz_vector = [&](int col) {
        std::vector<double> y(n, 0.0);
        for (int i = 0; i < m; ++i) axpy(y, vecs(i, col), basis[static_cast<size_t>(i)]);
        double nm = norm(y);
        if (nm > 0) scale(y, 1.0 / nm);
        return y;
      };
      auto true_residual = [&](double theta, const std::vector<double>& y) {
        std::vector<double> ay(n);
        op.apply(y, ay);
        axpy(ay, -theta, y);
        return norm(ay);
      };
      double rt = true_residual(vals(m - 1), ritz_vector(m - 1));
      double rb = true_residual(vals(0), ritz_vector(0));
      report.residual = std::max(rt, rb);
      report.converged = report.residual <= accept;

      // Exclude eigenvalues equal in magnitude to the degree: +2r is
      // deflated, -2r is deflated exactly when the graph is bipartite.
      double guard = std::max(report.residual, 1e-9 * degree);
      std::vector<double> candidates;
      if (std::abs(std::abs(report.lambda_top) - degree) > guard)
        candidates.push_back(std::abs(report.lambda_top));
      if (std::abs(std::abs(report.lambda_bottom) - degree) > guard)
        candidates.push_back(std::abs(report.lambda_bottom));
      if (!candidates.empty())
        report.lambda_nontrivial = *std::max_element(candidates.begin(), candidates.end());
      return report;
    }

    // Thick restart on the extreme Ritz pairs from both ends. At least one
    // slot always stays free so the chain can make progress.
    const int keep_low = std::min(keep_per_end, (m - 1) / 2);
    const int keep_high = std::min(keep_per_end, m - 1 - keep_low);
    std::vector<int> keep;
    for (int i = 0; i < keep_low; ++i) keep.push_back(i);
    for (int i = m - keep_high; i < m; ++i) keep.push_back(i);

    std::vector<std::vector<double>> new_basis;
    std::vector<double> new_theta, new_link;
    new_basis.reserve(keep.size());
    for (int col : keep) {
      std::vector<double> y(n, 0.0);
      for (int i = 0; i < m; ++i) axpy(y, vecs(i, col), basis[static_cast<size_t>(i)]);
      new_basis.push_back(std::move(y));
      new_theta.push_back(vals(col));
      new_link.push_back(beta_out * vecs(m - 1, col));
    }
    basis = std::move(new_basis);
    kept_theta = std::move(new_theta);
    link = std::move(new_link);
    alpha.clear();
    beta.clear();
  }
}

std::vector<double> dense_spectrum(const SchreierOperator& op) {
  if (op.size() > 4000) throw std::domain_error("dense_spectrum: graph too large");
  const int n = static_cast<int>(op.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int64_t v = 0; v < n; ++v)
    for (int64_t u : op.neighbors(v)) a(static_cast<int>(v), static_cast<int>(u)) += 1.0;
  // neighbors() lists both directions once each, so the counts above are
  // exactly the entries of A = sum (P + P^T).
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  std::vector<double> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = es.eigenvalues()(i);
  return out;
}

}  // namespace wordchar
