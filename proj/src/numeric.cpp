#include <mould/operator.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include <Eigen/Eigenvalues>

#include <mould/errors.hpp>

namespace mould
{

namespace
{

using cmatrix = Eigen::MatrixXcd;

cmatrix to_complex(const Matrix &m)
{
    const auto n = static_cast<Eigen::Index>(m.dim());
    cmatrix out(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            const auto &z = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
            out(r, c) = {z.re().to_double(), z.im().to_double()};
        }
    }
    return out;
}

std::vector<double> eigenvalues(const cmatrix &h)
{
    Eigen::SelfAdjointEigenSolver<cmatrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw domain_error("eigenvalue solver did not converge");
    }
    const auto &ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

// sum_k mu^k A_k in double precision.
cmatrix partial_sum(const MatrixSeries &s, double mu)
{
    cmatrix total = to_complex(s[s.order()]);
    for (int k = s.order() - 1; k >= 0; --k) {
        total = total * mu + to_complex(s[k]);
    }
    return total;
}

} // namespace

bool NumericReport::ok() const
{
    for (const auto &s : samples) {
        if (s.ambiguous) {
            return false;
        }
    }
    return std::all_of(ratio_ok.begin(), ratio_ok.end(), [](bool b) { return b; });
}

NumericReport numeric_compare(const PerturbationProblem &p, const NormalizationOutput &out, const std::vector<Rational> &mu_samples)
{
    NumericReport rep;
    rep.order = p.order;
    const EigenvalueSeries es = eigenvalue_series(p, out);
    MatrixSeries normal_form = out.N;
    normal_form[0] += p.H0();

    for (const auto &mu : mu_samples) {
        NumericSample s;
        s.mu = mu;
        const double x = mu.to_double();
        s.numeric = eigenvalues(to_complex(p.H0()) + x * to_complex(p.V));
        if (es.simple) {
            for (const auto &row : es.coefficients) {
                long double v = 0;
                for (std::size_t k = row.size(); k-- > 0;) {
                    v = v * x + static_cast<long double>(row[k].to_double());
                }
                s.predicted.push_back(static_cast<double>(v));
            }
            std::sort(s.predicted.begin(), s.predicted.end());
        } else {
            s.predicted = eigenvalues(partial_sum(normal_form, x));
        }
        const double range = s.numeric.back() - s.numeric.front();
        for (std::size_t k = 0; k < s.numeric.size(); ++k) {
            s.max_error = std::max(s.max_error, std::abs(s.numeric[k] - s.predicted[k]));
            if (k > 0 && s.predicted[k] - s.predicted[k - 1] < matching_tolerance * range) {
                s.ambiguous = true;
            }
        }
        rep.samples.push_back(std::move(s));
    }

    for (std::size_t j = 0; j + 1 < rep.samples.size(); ++j) {
        const auto &a = rep.samples[j];
        const auto &b = rep.samples[j + 1];
        const double ratio = b.max_error == 0 ? INFINITY : a.max_error / b.max_error;
        rep.ratios.push_back(ratio);
        if (a.max_error == 0 && b.max_error == 0) {
            rep.ratio_resolved.push_back(false);
            rep.ratio_ok.push_back(true);
            continue;
        }
        double magnitude = 1;
        for (double e : b.numeric) {
            magnitude = std::max(magnitude, std::abs(e));
        }
        const bool resolved = b.max_error > rounding_floor_ulps * std::numeric_limits<double>::epsilon() * magnitude;
        rep.ratio_resolved.push_back(resolved);
        const double scale = a.mu.to_double() / b.mu.to_double();
        rep.ratio_ok.push_back(!resolved || ratio >= std::pow(scale, p.order + 1) / order_fit_factor);
    }
    return rep;
}

} // namespace mould
