#pragma once

#include <string>
#include <vector>

#include "fluxring/ring.hpp"

// Order-of-magnitude estimators: interference-experiment duration vs particle
// size, temperature thresholds for resolving the quantized spectrum, and the
// uncertainty-product thought experiment.

namespace fluxring::feasibility {

inline constexpr double seconds_per_year = 3.156e7;

// m = g a^3 for a particle of size a and density g
double particle_mass(double a, double g);

// t_exp = a^5 g / (2 pi hbar)
double interference_time(double a, double g);

// the a^5 prefactor g / (2 pi hbar) [s/m^5]
double interference_time_coefficient(double g);

// T = hbar^2 / (2 m r^2 k_B)
double ring_temperature_threshold(double mass, double radius);

// T = N_s hbar^2 / (2 m r^2 k_B), grows with the condensate size
double condensate_temperature_threshold(const ring::RingSpec&, const ring::MaterialSpec&);

struct UncertaintyResult {
    double v_z;        // [m/s]
    double dv_z;       // [m/s]
    double product;    // [m^2/s], dz * dv_z
    double bound;      // [m^2/s], hbar / 2m
    bool below_bound;  // product < bound
};

// dv_z = v_z (dz/z + dt/t), valid only deep in the z >> dz, t >> dt regime
UncertaintyResult uncertainty_product(double z, double t, double dz, double dt, double mass);

struct ReportValue {
    std::string name;
    double value;
    std::string unit;
    std::string formula;
    std::string verdict;  // empty when no comparison applies
};

struct FeasibilityReport {
    std::vector<ReportValue> inputs;
    std::vector<ReportValue> results;
};

struct FeasibilityRequest {
    std::vector<double> interference_sizes;  // [m]; empty disables the ladder
    double density = 1e3;                    // [kg/m^3]

    bool single_particle = false;  // hbar^2/(2 m r^2 k_B) threshold row
    double single_mass = 0;        // [kg]
    double single_radius = 0;      // [m]

    bool condensate = false;  // condensate threshold row
    ring::RingSpec ring{};
    ring::MaterialSpec material{};

    bool uncertainty = false;  // thought-experiment row
    double u_z = 0, u_t = 0, u_dz = 0, u_dt = 0, u_mass = 0;
};

FeasibilityReport build_report(const FeasibilityRequest&);

// aligned plain-text rendering of a report
std::string to_text(const FeasibilityReport&);

}  // namespace fluxring::feasibility
