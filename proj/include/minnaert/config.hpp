#pragma once

#include <string>
#include <vector>

#include "minnaert/fields.hpp"
#include "minnaert/medium.hpp"
#include "minnaert/spectra.hpp"
#include "minnaert/types.hpp"

namespace minnaert {

struct SweepConfig {
    int n_min = 0;
    int n_max = 4;
    std::vector<cplx> k_values{0.1, 0.3, 0.7, cplx(0.5, 0.2)};
    double omega_min = 0.1;  // resonance curve sweep (rad/s)
    double omega_max = 10.0;
    int omega_count = 64;
    double field_omega = 1.0;  // frequency of the field snapshot
    double t_min = -3.0;       // time traces (s)
    double t_max = 12.0;
    int t_count = 301;
};

struct GridConfig {
    Vec3 lo{-0.1, -0.1, 0.0};
    Vec3 hi{0.1, 0.1, 0.0};
    std::array<int, 3> counts{11, 11, 1};
};

struct OutputConfig {
    std::string dir = "out";
    double tol_helmholtz = 1e-6;
    double tol_elastic = 1e-4;
    Fc2Variant fc2 = Fc2Variant::Upper;
    double eta0_scale = 1.0;  // test hook: perturbs eta_0 in the oracle suite
};

struct RunConfig {
    PhysicalMedium medium;
    ScatterScene scene;
    std::vector<Vec3> observers{{0.0, 0.05, 0.0}};
    GridConfig grid;
    SweepConfig sweep;
    OutputConfig output;
};

bool operator==(const RunConfig& a, const RunConfig& b);

// Parses the INI-like text with sections [medium], [scene], [sweep], [output].
// Missing keys keep their defaults; unknown keys and malformed values throw std::invalid_argument.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// Emits every key with enough digits that parse_config(emit_config(c)) == c.
std::string emit_config(const RunConfig& config);

// Validates medium, scene and sweep ranges before any computation.
void validate(const RunConfig& config);

std::string format_complex(cplx v);
cplx parse_complex(const std::string& text);

}  // namespace minnaert
