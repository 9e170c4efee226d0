#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

// Physical constants, CODATA 2018 (strict SI).

namespace fluxring {

struct PhysicalConstants {
    double hbar;        // reduced Planck constant [J s]
    double k_B;         // Boltzmann constant [J/K] (exact)
    double mu0;         // vacuum permeability [H/m]
    double e_charge;    // elementary charge [C] (exact)
    double m_electron;  // electron mass [kg]
};

inline constexpr PhysicalConstants codata{
    1.0545718176461565e-34,   // h / 2 pi with h = 6.62607015e-34 J s exact
    1.380649e-23,
    1.25663706212e-6,
    1.602176634e-19,
    9.1093837015e-31,
};

// Magnetic flux quantum 2 pi hbar / |q| for a carrier of charge q [Wb].
inline double flux_quantum(double q_pair)
{
    if (q_pair == 0.0)
        throw std::domain_error("flux quantum undefined for zero charge");
    return 2.0 * std::numbers::pi * codata.hbar / std::abs(q_pair);
}

}  // namespace fluxring
