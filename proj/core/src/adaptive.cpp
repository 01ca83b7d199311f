#include "gegen/adaptive.hpp"

#include "gegen/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <vector>

namespace gegen::oracles {

namespace {

// QUADPACK dqk15 abscissae/weights on [-1,1]; Gauss-7 points are the
// odd-indexed Kronrod abscissae.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct SegmentResult {
    double integral;
    double error;
};

SegmentResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);
    const double fc = f(c);

    double resg = wg[3] * fc;
    double resk = wgk[7] * fc;
    double resabs = std::abs(resk);
    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = hl * xgk[j];
        fv1[j] = f(c - dx);
        fv2[j] = f(c + dx);
        const double sum = fv1[j] + fv2[j];
        resk += wgk[j] * sum;
        resabs += wgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j % 2 == 1) resg += wg[j / 2] * sum;
    }
    const double mean = 0.5 * resk;
    double resasc = wgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += wgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));

    const double integral = resk * hl;
    resabs *= std::abs(hl);
    resasc *= std::abs(hl);
    double err = std::abs((resk - resg) * hl);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps_floor = 50.0 * 2.220446049250313e-16 * resabs;
    err = std::max(err, eps_floor);
    return {integral, err};
}

struct Segment {
    double error;
    double a;
    double b;
    double integral;
    // worst error first; ties broken by position for determinism
    bool operator<(const Segment& o) const {
        if (error != o.error) return error > o.error;
        return a < o.a;
    }
};

} // namespace

double adaptive_integral_1d(const std::function<double(double)>& f, double a, double b,
                            double tol, int max_segments) {
    if (!(tol > 0.0)) throw std::domain_error("adaptive_integral_1d: tol must be positive");
    if (a == b) return 0.0;

    const SegmentResult first = gk15(f, a, b);
    std::multiset<Segment> segs{{first.error, a, b, first.integral}};
    double total_err = first.error;
    double total_int = first.integral;

    while (total_err > tol && static_cast<int>(segs.size()) < max_segments) {
        const Segment worst = *segs.begin();
        segs.erase(segs.begin());
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval at rounding resolution; keep its estimate
            segs.insert({0.0, worst.a, worst.b, worst.integral});
            total_err -= worst.error;
            continue;
        }
        const SegmentResult left = gk15(f, worst.a, mid);
        const SegmentResult right = gk15(f, mid, worst.b);
        total_int += left.integral + right.integral - worst.integral;
        total_err += left.error + right.error - worst.error;
        segs.insert({left.error, worst.a, mid, left.integral});
        segs.insert({right.error, mid, worst.b, right.integral});
    }
    if (total_err > tol)
        throw numerical_error("adaptive_integral_1d: tolerance not reached within subdivision cap");

    // deterministic left-to-right resummation
    std::vector<Segment> ordered(segs.begin(), segs.end());
    std::sort(ordered.begin(), ordered.end(),
              [](const Segment& x, const Segment& y) { return x.a < y.a; });
    long double acc = 0.0L;
    for (const auto& s : ordered) acc += s.integral;
    return static_cast<double>(acc);
}

double adaptive_integral_to_inf(const std::function<double(double)>& f, double a, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("adaptive_integral_to_inf: tol must be positive");
    // windows [a + L(2^j - 1), a + L(2^{j+1} - 1)]: exponentially growing, the
    // piecewise form of an exp substitution
    const double L = 1.0;
    long double acc = 0.0L;
    int quiet = 0;
    for (int j = 0; j < 64; ++j) {
        const double w0 = a + L * (std::pow(2.0, j) - 1.0);
        const double w1 = a + L * (std::pow(2.0, j + 1) - 1.0);
        const double part = adaptive_integral_1d(f, w0, w1, tol / 8.0);
        acc += part;
        if (std::abs(part) < tol / 4.0) {
            if (++quiet >= 2) return static_cast<double>(acc);
        } else {
            quiet = 0;
        }
    }
    throw numerical_error("adaptive_integral_to_inf: integrand does not appear to decay");
}

double adaptive_integral_2d(const std::function<double(double, double)>& f,
                            double ax, double bx, double ay, double by, double tol) {
    const double inner_tol = tol / (2.0 * std::max(1.0, std::abs(by - ay)));
    const auto outer = [&](double y) {
        return adaptive_integral_1d([&](double x) { return f(x, y); }, ax, bx, inner_tol);
    };
    return adaptive_integral_1d(outer, ay, by, tol / 2.0);
}

double integrate_weighted_1d(const std::function<double(double)>& g, double lambda, double tol) {
    if (!(lambda > -0.5)) throw std::domain_error("integrate_weighted_1d: lambda must exceed -1/2");
    const double half_pi = std::numbers::pi / 2.0;
    // x = sin t maps the weight to cos(t)^(2 lambda)
    const auto integrand = [&](double t) {
        const double ct = std::cos(t);
        return g(std::sin(t)) * std::pow(ct, 2.0 * lambda);
    };
    return adaptive_integral_1d(integrand, -half_pi, half_pi, tol);
}

} // namespace gegen::oracles
