#include "naqc/tomography.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace naqc {

namespace {

constexpr int kParams = 16;
using Params = Eigen::Matrix<double, kParams, 1>;
using InverseHessian = Eigen::Matrix<double, kParams, kParams>;

// theta[0..3] hold the real diagonal of L; the strictly lower entries follow
// row by row as (re, im) pairs.
ComplexMatrix unpack(const Params& theta)
{
    ComplexMatrix l = ComplexMatrix::Zero(4, 4);
    int k = 4;
    for (int i = 0; i < 4; ++i) {
        l(i, i) = theta[i];
        for (int j = 0; j < i; ++j, k += 2)
            l(i, j) = Complex{theta[k], theta[k + 1]};
    }
    return l;
}

Params pack_gradient(const ComplexMatrix& y)
{
    Params g;
    int k = 4;
    for (int i = 0; i < 4; ++i) {
        g[i] = y(i, i).real();
        for (int j = 0; j < i; ++j, k += 2) {
            g[k] = y(i, j).real();
            g[k + 1] = y(i, j).imag();
        }
    }
    return g;
}

// Lower-triangular L with L^dagger L = rho, for full-rank rho.
Params factor(const ComplexMatrix& rho)
{
    // Reversing rows and columns turns the lower Cholesky factor of J rho J
    // into an upper factor U of rho = U U^dagger; L = U^dagger.
    const ComplexMatrix reversed = rho.reverse();
    const Eigen::LLT<ComplexMatrix> llt(reversed);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("mle: starting point is not positive definite");
    const ComplexMatrix upper = ComplexMatrix(llt.matrixL()).reverse();
    const ComplexMatrix l = upper.adjoint();
    Params theta;
    int k = 4;
    for (int i = 0; i < 4; ++i) {
        theta[i] = l(i, i).real();
        for (int j = 0; j < i; ++j, k += 2) {
            theta[k] = l(i, j).real();
            theta[k + 1] = l(i, j).imag();
        }
    }
    return theta;
}

class Likelihood {
public:
    Likelihood(const TomographyRecord& record, const TomoScheme& scheme)
        : scheme_(scheme), norm_(setting_normalizations(record))
    {
        counts_.reserve(record.counts.size());
        for (std::uint64_t n : record.counts) {
            counts_.push_back(static_cast<double>(n));
            total_ += static_cast<double>(n);
        }
    }

    double total_counts() const noexcept { return total_; }

    /// Log-likelihood of rho, -inf when a setting with counts has zero probability.
    double value(const ComplexMatrix& rho) const
    {
        double ll = 0.0;
        for (std::size_t s = 0; s < counts_.size(); ++s) {
            const double p = probability(rho, s);
            if (counts_[s] > 0.0) {
                if (!(p > 0.0))
                    return -std::numeric_limits<double>::infinity();
                ll += counts_[s] * std::log(p);
            }
            ll -= norm_[s] * p;
        }
        return ll;
    }

    /// d(ll)/d(rho) as the Hermitian matrix G with d(ll) = Tr(G d(rho)).
    ComplexMatrix gradient(const ComplexMatrix& rho) const
    {
        ComplexMatrix g = ComplexMatrix::Zero(4, 4);
        for (std::size_t s = 0; s < counts_.size(); ++s) {
            const double p = probability(rho, s);
            const double w = (counts_[s] > 0.0 ? counts_[s] / p : 0.0) - norm_[s];
            g += w * scheme_.effect(s);
        }
        return g;
    }

private:
    double probability(const ComplexMatrix& rho, std::size_t s) const
    {
        return rho.cwiseProduct(scheme_.effect(s).transpose()).sum().real();
    }

    const TomoScheme& scheme_;
    std::vector<double> counts_;
    std::vector<double> norm_;
    double total_ = 0.0;
};

// Objective minimized by the optimizer: -ll / total counts, as a function of theta.
struct Evaluation {
    double objective = std::numeric_limits<double>::infinity();
    Params gradient = Params::Zero();
};

Evaluation evaluate(const Likelihood& lik, const Params& theta)
{
    const ComplexMatrix l = unpack(theta);
    const ComplexMatrix a = l.adjoint() * l;
    const double t = a.trace().real();
    Evaluation e;
    if (!(t > 0.0))
        return e;
    const ComplexMatrix rho = a / t;
    const double ll = lik.value(rho);
    if (!std::isfinite(ll))
        return e;
    const double scale = lik.total_counts();
    e.objective = -ll / scale;
    const ComplexMatrix g = lik.gradient(rho);
    const Complex tr_g_rho = (g * rho).trace();
    const ComplexMatrix x = (g - tr_g_rho.real() * ComplexMatrix::Identity(4, 4)) / t;
    e.gradient = -2.0 * pack_gradient(l * x) / scale;
    return e;
}

DensityMatrix to_state(const Params& theta)
{
    const ComplexMatrix l = unpack(theta);
    ComplexMatrix a = l.adjoint() * l;
    a /= a.trace().real();
    return DensityMatrix(0.5 * (a + a.adjoint()));
}

ComplexMatrix starting_point(const TomographyRecord& record)
{
    constexpr double kMix = 1e-3;
    const ComplexMatrix mixed = ComplexMatrix::Identity(4, 4) / 4.0;
    try {
        const DensityMatrix clamped = clamp_to_physical(linear_inversion(record).rho_raw);
        return (1.0 - kMix) * clamped.matrix() + kMix * mixed;
    } catch (const std::invalid_argument&) {
        return mixed;
    }
}

} // namespace

double log_likelihood(const TomographyRecord& record, const TomoScheme& scheme, const DensityMatrix& rho)
{
    if (record.counts.size() != scheme.size())
        throw std::invalid_argument("log_likelihood: count list does not match the scheme");
    return Likelihood(record, scheme).value(rho.matrix());
}

ReconstructionResult mle_reconstruct(const TomographyRecord& record, const MleOptions& options)
{
    const TomoScheme scheme = TomoScheme::of(record.scheme);
    if (record.counts.size() != scheme.size())
        throw std::invalid_argument("mle_reconstruct: count list does not match the scheme");
    const Likelihood lik(record, scheme);
    if (!(lik.total_counts() > 0.0))
        throw std::invalid_argument("mle_reconstruct: record has no counts");
    const double scale = lik.total_counts();

    Params theta = factor(starting_point(record));
    Evaluation current = evaluate(lik, theta);
    if (!std::isfinite(current.objective)) {
        theta = factor(ComplexMatrix::Identity(4, 4) / 4.0);
        current = evaluate(lik, theta);
    }

    std::vector<double> trace{-current.objective * scale};
    InverseHessian h = InverseHessian::Identity();
    bool fresh_hessian = true;
    bool converged = false;
    int iterations = 0;

    while (iterations < options.max_iterations) {
        Params direction = -h * current.gradient;
        double slope = current.gradient.dot(direction);
        if (!(slope < 0.0)) {
            h.setIdentity();
            fresh_hessian = true;
            direction = -current.gradient;
            slope = current.gradient.dot(direction);
        }
        if (!(slope < 0.0)) {
            converged = true; // zero gradient
            break;
        }

        // Armijo backtracking.
        double alpha = 1.0;
        Params next;
        Evaluation trial;
        bool accepted = false;
        for (int k = 0; k < 60; ++k, alpha *= 0.5) {
            next = theta + alpha * direction;
            trial = evaluate(lik, next);
            if (trial.objective <= current.objective + 1e-4 * alpha * slope) {
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            if (!fresh_hessian) {
                h.setIdentity();
                fresh_hessian = true;
                continue;
            }
            // No representable ascent step along the gradient: stationary to machine precision.
            converged = true;
            break;
        }

        ++iterations;
        const Params step = next - theta;
        const Params dgrad = trial.gradient - current.gradient;
        const double improvement = (current.objective - trial.objective) * scale;
        theta = next;
        current = trial;
        trace.push_back(-current.objective * scale);

        const double sy = step.dot(dgrad);
        if (sy > 1e-300) {
            if (fresh_hessian) {
                h = InverseHessian::Identity() * (sy / dgrad.squaredNorm());
                fresh_hessian = false;
            }
            const double rho_k = 1.0 / sy;
            const InverseHessian left = InverseHessian::Identity() - rho_k * step * dgrad.transpose();
            h = left * h * left.transpose() + rho_k * step * step.transpose();
        }

        if (improvement < options.ll_tolerance || step.norm() < options.step_tolerance) {
            converged = true;
            break;
        }
    }

    return ReconstructionResult{to_state(theta), trace.back(), iterations, converged, std::move(trace)};
}

} // namespace naqc
