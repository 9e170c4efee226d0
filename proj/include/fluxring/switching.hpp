#pragma once

#include <cstdint>
#include <vector>

#include "fluxring/ring.hpp"

// Event-driven simulation of a ring whose segment switches between the
// superconducting and normal states. Normal intervals decay the circular
// current through R_s; each re-closing resets it to the quantized value and
// books the accompanying momentum kick 2 pi hbar (n - x).

namespace fluxring::switching {

enum class ScheduleMode { periodic, poisson };

struct SwitchSchedule {
    ScheduleMode mode = ScheduleMode::periodic;
    double omega_sw = 0;     // closing rate [1/s]
    double duty_normal = 0;  // fraction of a cycle spent normal, in (0, 1)
    std::uint64_t seed = 0;  // poisson mode and stochastic n selection
    double duration = 0;     // [s]
};

struct SegmentSpec {
    double R_s;  // resistance of the segment when normal [ohm]
    double l_s;  // switched length [m], less than the circumference
};

enum class NPolicy {
    ground,   // equilibrium winding number, ties resolve to the lower integer
    doublet,  // as ground, but exact ties are sampled 50/50
    thermal,  // Boltzmann-distributed winding number at temperature T
    fixed,    // always n_fixed
};

struct NSelection {
    NPolicy policy = NPolicy::doublet;
    std::int64_t n_fixed = 0;
};

struct SwitchEvent {
    double t;   // [s]
    bool open;  // true: segment goes normal, false: wave function closes
};

struct NormalInterval {
    double t_begin, t_end;    // [s]
    double I_begin, I_end;    // [A]
    double v_integral;        // [V s], analytic integral of R_s I(t)
};

struct Sample {
    double t;        // [s]
    double current;  // [A]
    double voltage;  // [V], R_s I while normal, 0 while superconducting
};

struct SwitchTrace {
    std::vector<SwitchEvent> events;
    std::vector<Sample> samples;
    std::vector<NormalInterval> intervals;
    std::vector<double> kick_momenta;      // [J s] per closing
    std::vector<std::int64_t> n_selected;  // winding number chosen per closing
    double duration = 0;                   // [s]
    double tau = 0;                        // [s]
    double L_total = 0;                    // [H]
    double R_s = 0;                        // [ohm]
    double x = 0;                          // applied flux ratio phi_ext/phi0
    double voltage_integral = 0;           // [V s] over the whole trace
    double current_integral = 0;           // [A s] over the whole trace
    bool warn_short_interval = false;      // some interval was below 1e-6 tau
};

// I(t) = I0 exp(-t/tau), evaluated analytically
double relax_current(double I0, double t, double tau);

double relaxation_time(double L_total, double R_s);

// momentum circulation restored at one closing: 2 pi hbar (n - x)
double closing_kick(std::int64_t n, double x);

SwitchTrace simulate(const ring::RingSpec&, const ring::MaterialSpec&, double T,
                     double phi_ext, const SegmentSpec&, const SwitchSchedule&,
                     double sample_dt, const NSelection& = {});

// time average of the segment voltage
double v_dc(const SwitchTrace&);

// time average of the circular current
double mean_current(const SwitchTrace&);

// (sum of kicks) / duration, the quantum-force circulation
double quantum_force_circulation(const SwitchTrace&);

struct FluxPoint {
    double x;     // flux ratio
    double v_dc;  // [V]
};

// V_dc over a grid of flux ratios. With a periodic schedule and the ground
// policy, degenerate half-integer points average the two tied branches.
std::vector<FluxPoint> vdc_vs_flux(const ring::RingSpec&, const ring::MaterialSpec&,
                                   double T, const SegmentSpec&, const SwitchSchedule&,
                                   const std::vector<double>& x_grid,
                                   const NSelection& = {});

}  // namespace fluxring::switching
