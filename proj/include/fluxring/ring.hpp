#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fluxring/constants.hpp"

// Stationary theory of a flux-biased superconducting ring: material model,
// quantized state ladder, fluxoid solver, persistent current, screening and
// thermal occupation.

namespace fluxring::ring {

struct MaterialSpec {
    double T_c;        // critical temperature [K]
    double lambda_L0;  // London penetration depth at T = 0 [m]
    double n_s0;       // pair density at T = 0 [1/m^3]
    double q_pair;     // carrier charge [C], 2e for Cooper pairs
    double m_pair;     // carrier mass [kg], 2 m_e for Cooper pairs
};

struct RingSpec {
    double radius;         // [m]
    double cross_section;  // wire section s [m^2]
    double wall_width;     // [m]
    double L_geom;         // geometric inductance [H]
    double N_s;            // number of pairs in the ring
};

struct RingState {
    std::int64_t n;  // winding number
    double phi_ext;  // externally applied flux [Wb]
    double T;        // [K]
};

void validate(const MaterialSpec&);
void validate(const RingSpec&);

// two-fluid density law n_s(T) = n_s0 (1 - T/T_c); zero at and above T_c
double pair_density(const MaterialSpec&, double T);

// n_s0 consistent with a measured penetration depth: m / (mu0 q^2 lambda^2)
double pair_density_from_lambda(double lambda_L0, double q_pair, double m_pair);

// circular-loop estimate mu0 r (ln(8r/a_w) - 2), wire radius a_w = sqrt(s/pi)
double loop_inductance_estimate(double radius, double cross_section);

// pair count n_s0 * s * 2 pi r
double pair_count(double radius, double cross_section, double n_s0);

// lambda_L(T) = lambda_L0 (1 - T/T_c)^{-1/2}; diverges at T_c
double lambda_L(const MaterialSpec&, double T);

double permitted_velocity(std::int64_t n, double x, const RingSpec&, const MaterialSpec&);

struct Equilibrium {
    std::int64_t n;
    bool degenerate;  // set at exact half-integer flux ratio
};

// integer minimizing (n - x)^2; ties resolve to the lower integer
Equilibrium equilibrium_n(double x);

double level_spacing_single(double mass, double radius);
double level_spacing_condensate(const RingSpec&, const MaterialSpec&);

// Boltzmann-weighted mean winding number at temperature T
double thermal_n_bar(double x, double T, const RingSpec&, const MaterialSpec&);

// normalized Boltzmann weights over the winding-number window used by
// thermal_n_bar; exposed so stochastic consumers can sample the distribution
std::vector<std::pair<std::int64_t, double>> thermal_weights(double x, double T,
                                                             const RingSpec&,
                                                             const MaterialSpec&);

double kinetic_inductance(const RingSpec&, const MaterialSpec&, double T);
double total_inductance(const RingSpec&, const MaterialSpec&, double T);

struct FluxoidSolution {
    double current;    // [A]
    double phi_total;  // [Wb]
};

// I = (n phi0 - phi_ext) / (L_k + L_geom), phi_total = phi_ext + L_geom I
FluxoidSolution fluxoid_solve(const RingSpec&, const MaterialSpec&, double T,
                              double phi_ext, std::int64_t n);

// fluxoid_solve at the equilibrium winding number: the sawtooth I_p(phi/phi0)
double persistent_current(const RingSpec&, const MaterialSpec&, double T, double phi_ext);

double screening_profile(double j0, double depth, double lambda);

double vortex_flux(std::int64_t n_vortices, double q_pair);

}  // namespace fluxring::ring
