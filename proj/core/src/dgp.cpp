#include "odsup/dgp.hpp"

#include <cmath>
#include <string>

#include "odsup/errors.hpp"
#include "odsup/rng.hpp"

namespace odsup {

namespace {

struct ParamUse {
    bool mu = false, sigma = false, ar = false, ma = false;
    bool cluster = false, tau = false, delta = false;
};

ParamUse allowed_params(DgpModel model) {
    ParamUse u;
    switch (model) {
        case DgpModel::M0: break;
        case DgpModel::MD: u.mu = true; break;
        case DgpModel::VCP: u.sigma = true; break;
        case DgpModel::AR: u.ar = true; break;
        case DgpModel::MA: u.ma = true; break;
        case DgpModel::MDMA: u.mu = u.ma = true; break;
        case DgpModel::VCPMA: u.sigma = u.ma = true; break;
        case DgpModel::Cluster: u.cluster = true; break;
        case DgpModel::ChangePoint: u.tau = u.delta = true; break;
    }
    return u;
}

[[noreturn]] void bad_param(const char* name, DgpModel model, const char* why) {
    throw ConfigError(std::string("parameter '") + name + "' " + why + " for model " +
                      to_string(model));
}

}  // namespace

const char* to_string(DgpModel model) {
    switch (model) {
        case DgpModel::M0: return "M0";
        case DgpModel::MD: return "MD";
        case DgpModel::VCP: return "VCP";
        case DgpModel::AR: return "AR";
        case DgpModel::MA: return "MA";
        case DgpModel::MDMA: return "MDMA";
        case DgpModel::VCPMA: return "VCPMA";
        case DgpModel::Cluster: return "Cluster";
        case DgpModel::ChangePoint: return "ChangePoint";
    }
    return "?";
}

std::optional<DgpModel> dgp_model_from_string(const std::string& name) {
    for (DgpModel m : {DgpModel::M0, DgpModel::MD, DgpModel::VCP, DgpModel::AR, DgpModel::MA,
                       DgpModel::MDMA, DgpModel::VCPMA, DgpModel::Cluster, DgpModel::ChangePoint}) {
        if (name == to_string(m)) return m;
    }
    return std::nullopt;
}

void validate_spec(const DgpSpec& spec) {
    if (spec.n < 3) throw ConfigError("simulation needs n >= 3");
    if (spec.p < 1) throw ConfigError("simulation needs p >= 1");
    const ParamUse use = allowed_params(spec.model);

    if (spec.mu.has_value() != use.mu)
        bad_param("mu", spec.model, use.mu ? "is required" : "is not accepted");
    if (spec.sigma.has_value() != use.sigma)
        bad_param("sigma", spec.model, use.sigma ? "is required" : "is not accepted");
    if (spec.ar.has_value() != use.ar)
        bad_param("a", spec.model, use.ar ? "is required" : "is not accepted");
    if (spec.ma.has_value() != use.ma)
        bad_param("b", spec.model, use.ma ? "is required" : "is not accepted");
    if (spec.cluster.has_value() != use.cluster)
        bad_param("m", spec.model, use.cluster ? "is required" : "is not accepted");
    if (use.tau) {
        if (!spec.tau) bad_param("tau", spec.model, "is required");
        if (!(*spec.tau > 0.0 && *spec.tau < 1.0)) {
            throw ConfigError("tau must lie strictly in (0,1)");
        }
    } else if (spec.tau) {
        bad_param("tau", spec.model, "is not accepted");
    }
    if (!use.delta && spec.delta) bad_param("delta", spec.model, "is not accepted");
    if (use.cluster && *spec.cluster < 1) throw ConfigError("cluster size m must be >= 1");
}

std::vector<double> innovations(std::uint64_t seed, std::size_t count, std::size_t p) {
    rng::Stream stream(seed, 0);
    std::vector<double> values(count * p);
    for (double& v : values) v = stream.next_normal();
    return values;
}

ObservationSet generate(const DgpSpec& spec) {
    validate_spec(spec);
    const std::size_t n = spec.n;
    const std::size_t p = spec.p;

    // Cluster duplicates its innovation rows; everything else transforms them.
    if (spec.model == DgpModel::Cluster) {
        const std::size_t m = *spec.cluster;
        const std::size_t groups = (n + m - 1) / m;
        const std::vector<double> y = innovations(spec.seed, groups, p);
        std::vector<double> x(n * p);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t g = i / m;
            for (std::size_t d = 0; d < p; ++d) x[i * p + d] = y[g * p + d];
        }
        return ObservationSet::vectors(std::move(x), n, p);
    }

    std::vector<double> eps = innovations(spec.seed, n, p);
    std::vector<double> x(n * p);
    const std::size_t half = n / 2;  // "i <= n/2" read as i <= floor(n/2), 1-based

    switch (spec.model) {
        case DgpModel::M0:
            x = eps;
            break;
        case DgpModel::MD: {
            const double mu = *spec.mu;
            for (std::size_t i = 0; i < n; ++i) {
                const double drift = static_cast<double>(i + 1) * mu;
                for (std::size_t d = 0; d < p; ++d) x[i * p + d] = drift + eps[i * p + d];
            }
            break;
        }
        case DgpModel::VCP: {
            const double sigma = *spec.sigma;
            for (std::size_t i = 0; i < n; ++i) {
                const double s = (i + 1 <= half) ? 1.0 : sigma;
                for (std::size_t d = 0; d < p; ++d) x[i * p + d] = s * eps[i * p + d];
            }
            break;
        }
        case DgpModel::AR: {
            // Starts at i = 3 from X_1 = e_1, X_2 = e_2; no burn-in.
            const double a = *spec.ar;
            for (std::size_t d = 0; d < p; ++d) {
                x[d] = eps[d];
                x[p + d] = eps[p + d];
            }
            for (std::size_t i = 2; i < n; ++i) {
                for (std::size_t d = 0; d < p; ++d) {
                    x[i * p + d] =
                        a * (x[(i - 1) * p + d] - x[(i - 2) * p + d]) + eps[i * p + d];
                }
            }
            break;
        }
        case DgpModel::MA: {
            const double b = *spec.ma;
            for (std::size_t d = 0; d < p; ++d) x[d] = eps[d];
            for (std::size_t i = 1; i < n; ++i) {
                for (std::size_t d = 0; d < p; ++d) {
                    x[i * p + d] = eps[i * p + d] + b * eps[(i - 1) * p + d];
                }
            }
            break;
        }
        case DgpModel::MDMA: {
            const double mu = *spec.mu;
            const double b = *spec.ma;
            for (std::size_t d = 0; d < p; ++d) x[d] = mu + eps[d];
            for (std::size_t i = 1; i < n; ++i) {
                const double drift = static_cast<double>(i + 1) * mu;
                for (std::size_t d = 0; d < p; ++d) {
                    x[i * p + d] = drift + eps[i * p + d] + b * eps[(i - 1) * p + d];
                }
            }
            break;
        }
        case DgpModel::VCPMA: {
            const double sigma = *spec.sigma;
            const double b = *spec.ma;
            for (std::size_t d = 0; d < p; ++d) x[d] = eps[d];
            for (std::size_t i = 1; i < n; ++i) {
                const double s = (i + 1 <= half) ? 1.0 : sigma;
                for (std::size_t d = 0; d < p; ++d) {
                    x[i * p + d] = s * (eps[i * p + d] + b * eps[(i - 1) * p + d]);
                }
            }
            break;
        }
        case DgpModel::ChangePoint: {
            const double delta = spec.delta.value_or(1.0);
            const auto pre =
                static_cast<std::size_t>(std::floor(static_cast<double>(n) * *spec.tau));
            for (std::size_t i = 0; i < n; ++i) {
                const double shift = (i < pre) ? 0.0 : delta;
                for (std::size_t d = 0; d < p; ++d) x[i * p + d] = shift + eps[i * p + d];
            }
            break;
        }
        case DgpModel::Cluster:
            break;  // handled above
    }
    return ObservationSet::vectors(std::move(x), n, p);
}

}  // namespace odsup
