#include "gegen/builtins.hpp"

#include "gegen/errors.hpp"
#include "gegen/family.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace gegen {

namespace {

std::vector<double> parse_args(const std::string& name, std::size_t lparen) {
    if (name.back() != ')') throw config_error("builtin_function: malformed name '" + name + "'");
    std::vector<double> args;
    std::size_t pos = lparen + 1;
    const std::string body = name.substr(pos, name.size() - pos - 1);
    std::size_t start = 0;
    while (start <= body.size()) {
        const std::size_t comma = body.find(',', start);
        const std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            std::size_t used = 0;
            args.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw config_error("builtin_function: bad argument '" + tok + "' in '" + name + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return args;
}

std::complex<double> sum_sq(std::span<const std::complex<double>> z) {
    std::complex<double> w = 0.0;
    for (const auto& zi : z) w += zi * zi;
    return w;
}

TargetFunction make_runge_like(const std::string& name, double h2) {
    // 1 / (x1^2 + x2^2 + h^2); pole at sum = -h^2, so the region parameter
    // h of Assumption-type analyticity is exactly sqrt(h2).
    TargetFunction f;
    f.name = name;
    f.dim = 2;
    f.evaluator = [h2](std::span<const double> x) {
        return 1.0 / (x[0] * x[0] + x[1] * x[1] + h2);
    };
    f.analyticity = AnalyticityContext::region(std::sqrt(h2), 0.0);
    f.isotropic_profile = [h2](std::complex<double> w) { return 1.0 / (w + h2); };
    f.complex_eval = [h2](std::span<const std::complex<double>> z) {
        return 1.0 / (sum_sq(z) + h2);
    };
    f.singular_w = -h2;
    return f;
}

} // namespace

int finite_reg_sobolev_order(double s) {
    // d^m/dx^m |x|^s ~ |x|^(s-m) near 0; in L^2 iff m < s + 1/2.
    const int m = static_cast<int>(std::ceil(s + 0.5)) - 1;
    return std::max(1, m);
}

double finite_reg_vkm(double s, double lambda, const MultiIndex& k, const MultiIndex& m) {
    if (k.dim() != m.dim()) throw std::domain_error("finite_reg_vkm: dimension mismatch");
    // Per dimension, with n = min(k_j, m_j):
    //   int_{-1}^{1} (c_n |x|^(s-n))^2 (1-x^2)^(lambda+n-1/2) dx
    //     = c_n^2 B(s-n+1/2, lambda+n+1/2),  c_n = s(s-1)...(s-n+1)
    double log_v2 = 0.0;
    for (int j = 0; j < k.dim(); ++j) {
        const int n = std::min(k[j], m[j]);
        double log_c = 0.0;
        for (int i = 0; i < n; ++i) log_c += std::log(std::abs(s - i));
        log_v2 += 2.0 * log_c + std::lgamma(s - n + 0.5) + std::lgamma(lambda + n + 0.5)
                  - std::lgamma(s + lambda + 1.0);
    }
    return std::exp(0.5 * log_v2);
}

TargetFunction builtin_function(const std::string& name) {
    if (name == "f1") {
        TargetFunction f;
        f.name = name;
        f.dim = 2;
        f.evaluator = [](std::span<const double> x) {
            return std::sqrt(x[0] * x[0] + x[1] * x[1] + 0.5);
        };
        // branch point at x1^2 + x2^2 = -1/2  =>  h^2 = 0.5
        f.analyticity = AnalyticityContext::region(std::sqrt(0.5), 0.0);
        f.isotropic_profile = [](std::complex<double> w) { return std::sqrt(w + 0.5); };
        f.complex_eval = [](std::span<const std::complex<double>> z) {
            return std::sqrt(sum_sq(z) + 0.5);
        };
        f.singular_w = -0.5;
        return f;
    }
    if (name == "f2") {
        TargetFunction f = make_runge_like("f2", 1.0);
        return f;
    }
    if (name == "poly_test") {
        TargetFunction f;
        f.name = name;
        f.dim = 2;
        f.evaluator = [](std::span<const double> x) {
            const FamilyParam leg = FamilyParam::legendre();
            return eval_poly(leg, 2, x[0]) * eval_poly(leg, 3, x[1]);
        };
        return f;
    }
    const auto lparen = name.find('(');
    if (lparen != std::string::npos) {
        const std::string base = name.substr(0, lparen);
        const auto args = parse_args(name, lparen);
        if (base == "runge") {
            if (args.size() != 1 || !(args[0] > 0.0))
                throw config_error("builtin_function: runge(h) needs one positive argument");
            return make_runge_like(name, args[0] * args[0]);
        }
        if (base == "finite_reg") {
            if (args.size() != 2) throw config_error("builtin_function: finite_reg(s,d) needs two arguments");
            const double s = args[0];
            const int d = static_cast<int>(args[1]);
            if (!(s > 0.5) || d < 1 || args[1] != d)
                throw config_error("builtin_function: finite_reg needs s > 1/2 and integer d >= 1");
            TargetFunction f;
            f.name = name;
            f.dim = d;
            f.evaluator = [s](std::span<const double> x) {
                double p = 1.0;
                for (double xi : x) p *= std::pow(std::abs(xi), s);
                return p;
            };
            f.regularity = MultiIndex(std::vector<int>(static_cast<std::size_t>(d),
                                                       finite_reg_sobolev_order(s)));
            return f;
        }
        throw config_error("builtin_function: unknown function '" + name + "'");
    }
    throw config_error("builtin_function: unknown function '" + name + "'");
}

namespace oracles {

std::complex<double> complex_eval_builtin(const std::string& name,
                                          std::span<const std::complex<double>> z) {
    const TargetFunction f = builtin_function(name);
    if (!f.complex_eval) throw config_error("complex_eval_builtin: '" + name + "' has no continuation");
    if (static_cast<int>(z.size()) != f.dim)
        throw std::domain_error("complex_eval_builtin: dimension mismatch");
    if (f.singular_w) {
        std::complex<double> w = 0.0;
        for (const auto& zi : z) w += zi * zi;
        if (std::abs(w - *f.singular_w) < 1e-8)
            throw std::domain_error("complex_eval_builtin: point within 1e-8 of the singular variety");
    }
    return f.complex_eval(z);
}

} // namespace oracles

} // namespace gegen
