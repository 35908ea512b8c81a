#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uavnet {

/// Shared tolerance policy for every analytic formula in the library.
/// Chosen so quadrature error stays far below Monte Carlo CI widths (~1e-3).
inline constexpr double kDefaultRelTol = 1e-9;
inline constexpr double kDefaultAbsTol = 1e-12;

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// Thrown when adaptive subdivision exhausts its budget before reaching the
/// requested tolerance. Carries the best estimate obtained so far.
class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& what, QuadratureResult partial_result)
        : std::runtime_error(what), partial(partial_result) {}
    QuadratureResult partial;
};

namespace detail {

// 15-point Kronrod / 7-point Gauss rule (QUADPACK dqk15 constants).
inline constexpr double kGk15Nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    double value;
    double error;
};

// Evaluates the GK15 pair on [a, b]; the returned error follows QUADPACK's
// scaling of |K15 - G7| and is intentionally conservative.
template <typename F>
Segment gauss_kronrod_15(F&& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fv1[7];
    double fv2[7];
    const double fc = f(center);
    double result_gauss = fc * kGaussWeights[3];
    double result_kronrod = fc * kKronrodWeights[7];
    double result_abs = std::abs(result_kronrod);

    for (int j = 0; j < 7; ++j) {
        const double dx = half * kGk15Nodes[j];
        fv1[j] = f(center - dx);
        fv2[j] = f(center + dx);
        const double fsum = fv1[j] + fv2[j];
        if (j % 2 == 1) result_gauss += kGaussWeights[j / 2] * fsum;
        result_kronrod += kKronrodWeights[j] * fsum;
        result_abs += kKronrodWeights[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    }

    const double mean = 0.5 * result_kronrod;
    double result_asc = kKronrodWeights[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j) {
        result_asc += kKronrodWeights[j] *
                      (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
    }

    result_abs *= std::abs(half);
    result_asc *= std::abs(half);
    double err = std::abs((result_kronrod - result_gauss) * half);
    if (result_asc != 0.0 && err != 0.0)
        err = result_asc * std::min(1.0, std::pow(200.0 * err / result_asc, 1.5));
    const double uflow = std::numeric_limits<double>::min();
    const double eps = std::numeric_limits<double>::epsilon();
    if (result_abs > uflow / (50.0 * eps))
        err = std::max(err, 50.0 * eps * result_abs);

    return {a, b, result_kronrod * half, err};
}

inline double neumaier_sum(const std::vector<Segment>& segments, bool errors) {
    double sum = 0.0, comp = 0.0;
    for (const Segment& s : segments) {
        const double x = errors ? s.error : s.value;
        const double t = sum + x;
        comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod quadrature of f over the finite interval
/// [lower, upper]. The reported abs_error_estimate is an upper bound for
/// smooth integrands. Throws quadrature_error (with the partial result) when
/// the subdivision budget runs out before the tolerance is met.
template <typename F>
QuadratureResult integrate(F&& f, double lower, double upper,
                           double rel_tol = kDefaultRelTol,
                           double abs_tol = kDefaultAbsTol) {
    if (!(lower < upper) || !std::isfinite(lower) || !std::isfinite(upper))
        throw std::invalid_argument("integrate: requires finite lower < upper");

    constexpr std::size_t kMaxSegments = 4096;
    const double min_width = 64.0 * std::numeric_limits<double>::epsilon() *
                             std::max({std::abs(lower), std::abs(upper), 1.0});

    std::vector<detail::Segment> segs;
    segs.reserve(256);
    segs.push_back(detail::gauss_kronrod_15(f, lower, upper));
    std::size_t evals = 15;

    auto by_error = [](const detail::Segment& x, const detail::Segment& y) {
        return x.error < y.error;
    };
    std::vector<detail::Segment> frozen;  // intervals too narrow to split again

    double total_value = segs.front().value;
    double total_error = segs.front().error;
    while (total_error > std::max(abs_tol, rel_tol * std::abs(total_value))) {
        if (segs.empty() || segs.size() + frozen.size() >= kMaxSegments) {
            QuadratureResult partial{total_value, total_error, evals};
            throw quadrature_error(
                "integrate: tolerance not reached after " +
                    std::to_string(segs.size() + frozen.size()) + " subdivisions",
                partial);
        }
        std::pop_heap(segs.begin(), segs.end(), by_error);
        detail::Segment worst = segs.back();
        segs.pop_back();
        if (worst.b - worst.a < min_width) {
            frozen.push_back(worst);
        } else {
            const double mid = 0.5 * (worst.a + worst.b);
            detail::Segment left = detail::gauss_kronrod_15(f, worst.a, mid);
            detail::Segment right = detail::gauss_kronrod_15(f, mid, worst.b);
            evals += 30;
            segs.push_back(left);
            std::push_heap(segs.begin(), segs.end(), by_error);
            segs.push_back(right);
            std::push_heap(segs.begin(), segs.end(), by_error);
        }
        segs.insert(segs.end(), frozen.begin(), frozen.end());
        total_value = detail::neumaier_sum(segs, false);
        total_error = detail::neumaier_sum(segs, true);
        segs.resize(segs.size() - frozen.size());
    }

    segs.insert(segs.end(), frozen.begin(), frozen.end());
    return {detail::neumaier_sum(segs, false), detail::neumaier_sum(segs, true),
            evals};
}

/// Integrates f over [lower, inf) through the map x = lower + t/(1-t),
/// t in [0,1). Suitable for integrands with Gaussian-type tail decay.
template <typename F>
QuadratureResult integrate_semi_infinite(F&& f, double lower,
                                         double rel_tol = kDefaultRelTol,
                                         double abs_tol = kDefaultAbsTol) {
    auto mapped = [&f, lower](double t) {
        const double w = 1.0 - t;
        const double fx = f(lower + t / w);
        return fx == 0.0 ? 0.0 : fx / (w * w);  // avoid 0 * inf at the far tail
    };
    return integrate(mapped, 0.0, 1.0, rel_tol, abs_tol);
}

/// Golden-section minimization of a unimodal f on [lo, hi]. The bracket is
/// trusted; the argmin is located to within x_tol.
template <typename F>
std::pair<double, double> minimize_scalar(F&& f, double lo, double hi,
                                          double x_tol) {
    static const double kInvPhi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > x_tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

}  // namespace uavnet
