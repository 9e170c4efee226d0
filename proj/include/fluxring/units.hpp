#pragma once

#include <string>

// Compile-time dimension bookkeeping. Formulas whose unit content is not
// obvious carry a static_assert over these tags; the structs never exist at
// runtime except when a report wants a printable unit string.

namespace fluxring::units {

struct Dim {
    int m = 0;   // length
    int kg = 0;  // mass
    int s = 0;   // time
    int A = 0;   // current
    int K = 0;   // temperature

    friend constexpr Dim operator*(Dim a, Dim b)
    {
        return {a.m + b.m, a.kg + b.kg, a.s + b.s, a.A + b.A, a.K + b.K};
    }
    friend constexpr Dim operator/(Dim a, Dim b)
    {
        return {a.m - b.m, a.kg - b.kg, a.s - b.s, a.A - b.A, a.K - b.K};
    }
    friend constexpr bool operator==(Dim a, Dim b)
    {
        return a.m == b.m && a.kg == b.kg && a.s == b.s && a.A == b.A && a.K == b.K;
    }
};

constexpr Dim pow(Dim a, int n)
{
    return {a.m * n, a.kg * n, a.s * n, a.A * n, a.K * n};
}

inline constexpr Dim scalar{};
inline constexpr Dim metre{1, 0, 0, 0, 0};
inline constexpr Dim kilogram{0, 1, 0, 0, 0};
inline constexpr Dim second{0, 0, 1, 0, 0};
inline constexpr Dim ampere{0, 0, 0, 1, 0};
inline constexpr Dim kelvin{0, 0, 0, 0, 1};

inline constexpr Dim joule = kilogram * pow(metre, 2) / pow(second, 2);
inline constexpr Dim action = joule * second;                 // J s
inline constexpr Dim volt = joule / (ampere * second);        // W/A
inline constexpr Dim weber = volt * second;
inline constexpr Dim henry = weber / ampere;
inline constexpr Dim ohm = volt / ampere;
inline constexpr Dim tesla = weber / pow(metre, 2);

// Printable form, e.g. "m^2 s^-1"; dimensionless gives "1".
inline std::string to_string(Dim d)
{
    std::string out;
    auto emit = [&out](const char* sym, int n) {
        if (n == 0) return;
        if (!out.empty()) out += ' ';
        out += sym;
        if (n != 1) out += '^' + std::to_string(n);
    };
    emit("kg", d.kg);
    emit("m", d.m);
    emit("s", d.s);
    emit("A", d.A);
    emit("K", d.K);
    return out.empty() ? "1" : out;
}

}  // namespace fluxring::units
