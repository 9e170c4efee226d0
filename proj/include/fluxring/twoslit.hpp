#pragma once

#include <cstdint>
#include <vector>

#include "fluxring/constants.hpp"

// Two-slit interference with a confined flux between the slits: screen
// intensity with the flux-dependent phase, and Monte Carlo accumulation of
// detection points on the screen.

namespace fluxring::twoslit {

enum class Envelope { uniform, single_slit };

struct InterferenceSetup {
    double slit_separation;  // d [m]
    double screen_distance;  // L [m]
    double slit_width;       // a_s [m]
    double particle_mass;    // [kg]
    double particle_speed;   // [m/s]
    double particle_charge;  // q [C]
    double enclosed_flux;    // [Wb], confined between the slits
    Envelope envelope = Envelope::uniform;
};

struct Pattern {
    std::vector<double> y;          // [m]
    std::vector<double> intensity;  // arbitrary units, >= 0
    double fringe_period;           // [m], lambda L / d
    double flux_shift;              // [m], (phi/phi0) * fringe_period
};

void validate(const InterferenceSetup&);

// lambda = 2 pi hbar / (m v)
double de_broglie_wavelength(double mass, double speed);

// far-field (Fraunhofer) validity: L >= 10 d^2 / lambda
bool far_field_ok(const InterferenceSetup&);

double fringe_period(const InterferenceSetup&);

// phi1 - phi2 = 2 pi d y / (lambda L) + 2 pi phi/phi0
double phase_difference(const InterferenceSetup&, double y);

// P(y) = |A1|^2 + |A2|^2 + 2 |A1 A2| cos(phi1 - phi2)
double intensity(const InterferenceSetup&, double y);

Pattern pattern(const InterferenceSetup&, double y_min, double y_max, int n_points);

// inverse-CDF draws from the pattern treated as a piecewise-linear density
std::vector<double> sample_detections(const Pattern&, std::size_t count, std::uint64_t seed);

// Kolmogorov-Smirnov distance of samples against the uniform law on [a, b]
double ks_uniform(std::vector<double> samples, double a, double b);

struct Chi2Result {
    double statistic;
    int dof;
};

// chi^2 of binned detections against the pattern density
Chi2Result chi_square_fit(const Pattern&, const std::vector<double>& detections, int n_bins);

}  // namespace fluxring::twoslit
