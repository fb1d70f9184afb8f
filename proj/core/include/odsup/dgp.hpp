#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "odsup/observations.hpp"

namespace odsup {

// Simulation models: the iid null plus the alternatives used in the
// size/power study. All draw p-dimensional iid standard-normal innovations.
enum class DgpModel {
    M0,      // X_i = e_i
    MD,      // mean drift: X_i = i mu 1 + e_i
    VCP,     // variance change-point: X_i = (1{i <= n/2} + sigma 1{i > n/2}) e_i
    AR,      // X_1 = e_1, X_2 = e_2, X_i = a (X_{i-1} - X_{i-2}) + e_i
    MA,      // X_1 = e_1, X_i = e_i + b e_{i-1}
    MDMA,    // mean drift on top of the MA recursion
    VCPMA,   // variance change-point on top of the MA recursion
    Cluster, // X_i = Y_{floor((i-1)/m)+1} with iid Y: exact duplicates in runs of m
    ChangePoint,  // first floor(n tau) obs ~ N(0, I), rest ~ N(delta 1, I)
};

const char* to_string(DgpModel model);
std::optional<DgpModel> dgp_model_from_string(const std::string& name);

struct DgpSpec {
    DgpModel model = DgpModel::M0;
    std::size_t n = 0;
    std::size_t p = 5;
    // Exactly the parameters relevant to the model may be set; anything else
    // is rejected. ChangePoint's delta defaults to 1 when omitted.
    std::optional<double> mu;           // MD, MDMA: drift per step
    std::optional<double> sigma;        // VCP, VCPMA: post-break scale
    std::optional<double> ar;           // AR coefficient a
    std::optional<double> ma;           // MA coefficient b
    std::optional<std::size_t> cluster; // Cluster size m >= 1
    std::optional<double> tau;          // ChangePoint break fraction in (0,1)
    std::optional<double> delta;        // ChangePoint mean shift of the second segment
    std::uint64_t seed = 0;
};

// Throws ConfigError when parameters are missing, extraneous, or out of range.
void validate_spec(const DgpSpec& spec);

// Deterministic sample for the spec; same (spec, seed) gives identical bytes.
ObservationSet generate(const DgpSpec& spec);

// The shared Gaussian source behind every model: count p-dimensional iid
// standard-normal vectors (row-major), drawn from the counter-based stream
// for `seed`. Two calls with the same arguments return identical values.
std::vector<double> innovations(std::uint64_t seed, std::size_t count, std::size_t p);

}  // namespace odsup
