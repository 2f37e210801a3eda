#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "kam/errors.hpp"

namespace kam {

enum class ScaleMode { Fast, Slow, Mixed };

inline const char* to_string(ScaleMode m) {
    switch (m) {
        case ScaleMode::Fast: return "fast";
        case ScaleMode::Slow: return "slow";
        case ScaleMode::Mixed: return "mixed";
    }
    return "?";
}

// Scale bookkeeping shared by every series and every KAM run.
//
// lambda1 = eps^alpha (fast angles x/lambda1), lambda2 = eps^beta (slow angles
// lambda2*phi).  sigma is forced to 1/(2(m+1)) so that alpha_nu = mu_nu^{2 sigma}
// equals mu_nu^{1/(m+1)}.  alpha = 0 or beta = 0 degenerates to the classical
// single-scale algebra (lambda = 1).
struct ScaleParams {
    double eps = 1.0;
    double alpha = 0.0;
    double beta = 0.0;
    double lambda1 = 1.0;
    double lambda2 = 1.0;
    int d = 1;       // block dimension (all three blocks share d)
    int m = 1;       // Taylor truncation order
    double tau = 2.0;
    double sigma = 0.25; // = 1/(2(m+1))
    int eta = 4;         // smallest positive integer with (1+sigma)^eta > 2

    static ScaleParams make(double eps, double alpha, double beta, int d, int m,
                            double tau, int eta = 0) {
        if (eps <= 0.0) throw ConfigError("ScaleParams: eps must be > 0");
        if (alpha < 0.0 || beta < 0.0) throw ConfigError("ScaleParams: alpha, beta must be >= 0");
        if (d < 1) throw ConfigError("ScaleParams: d must be >= 1");
        if (m < 1) throw ConfigError("ScaleParams: m must be >= 1");
        ScaleParams p;
        p.eps = eps;
        p.alpha = alpha;
        p.beta = beta;
        p.lambda1 = std::pow(eps, alpha);
        p.lambda2 = std::pow(eps, beta);
        p.d = d;
        p.m = m;
        p.tau = tau;
        p.sigma = 1.0 / (2.0 * (m + 1));
        p.eta = eta > 0 ? eta : min_eta(p.sigma);
        return p;
    }

    // Classical single-scale parameters: lambda1 = lambda2 = 1.
    static ScaleParams classical(int d, int m = 1, double tau = 2.0) {
        return make(1.0, 0.0, 0.0, d, m, tau);
    }

    static int min_eta(double sigma) {
        int eta = 1;
        while (std::pow(1.0 + sigma, eta) <= 2.0) ++eta;
        return eta;
    }

    double tau_lower_bound() const { return double(d) * (d - 1) - 1.0; }

    // Theorem bound on beta for the mixed-scale iteration.
    double beta_bound_mixed() const {
        return sigma * sigma / (3.0 * ((d + m + 5) * tau + d + 2 * m + 13));
    }

    // Theorem bound on beta for the slow-only iteration.
    double beta_bound_slow() const {
        return sigma * sigma / ((d + m + 5) * tau + d + m + 9);
    }

    bool series_compatible(const ScaleParams& o) const {
        return d == o.d && lambda1 == o.lambda1 && lambda2 == o.lambda2;
    }

    // Structured violation list; empty means valid for the given mode.
    std::vector<std::string> validate(ScaleMode mode) const {
        std::vector<std::string> v;
        auto rel = [](double a, double b) {
            return std::abs(a - b) <= 1e-15 * std::max({std::abs(a), std::abs(b), 1.0});
        };
        if (!rel(lambda1, std::pow(eps, alpha)))
            v.push_back("lambda1_mismatch: lambda1 != eps^alpha");
        if (!rel(lambda2, std::pow(eps, beta)))
            v.push_back("lambda2_mismatch: lambda2 != eps^beta");
        if (!rel(sigma, 1.0 / (2.0 * (m + 1))))
            v.push_back("sigma_m_link: sigma must equal 1/(2(m+1)) = " +
                        std::to_string(1.0 / (2.0 * (m + 1))));
        if (!(sigma > 0.0 && sigma < 1.0 / 3.0))
            v.push_back("sigma_out_of_range: sigma must lie in (0, 1/3)");
        if (!(tau > tau_lower_bound()))
            v.push_back("tau_out_of_range: tau must exceed d(d-1)-1 = " +
                        std::to_string(tau_lower_bound()));
        if (!(std::pow(1.0 + sigma, eta) > 2.0))
            v.push_back("eta_too_small: (1+sigma)^eta must exceed 2");
        if (mode == ScaleMode::Mixed) {
            double b = beta_bound_mixed();
            if (!(beta > 0.0 && beta < b))
                v.push_back("beta_out_of_range: mixed mode needs beta in (0, " +
                            std::to_string(b) + ")");
        } else if (mode == ScaleMode::Slow) {
            double b = beta_bound_slow();
            if (!(beta > 0.0 && beta < b))
                v.push_back("beta_out_of_range: slow mode needs beta in (0, " +
                            std::to_string(b) + ")");
        }
        return v;
    }
};

} // namespace kam
