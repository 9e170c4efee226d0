#include "fluxring/switching.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fluxring/rng.hpp"
#include "fluxring/units.hpp"

namespace fluxring::switching {

namespace {

namespace u = fluxring::units;

static_assert(u::henry / u::ohm == u::second);                    // relaxation time
static_assert(u::ohm * u::ampere * u::second == u::weber);        // voltage integral
static_assert(u::henry * u::ampere == u::weber);                  // L dI bookkeeping
static_assert(u::action / u::second == u::joule);                 // kick rate

// Neumaier-compensated accumulator; event sums must stay well below the
// 1e-12 comparison tolerances even over 1e4+ cycles.
struct Kahan {
    double s = 0, c = 0;
    void add(double v)
    {
        const double t = s + v;
        if (std::abs(s) >= std::abs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    double get() const { return s + c; }
};

void check(bool ok, const char* msg)
{
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

double relax_current(double I0, double t, double tau)
{
    check(tau > 0, "tau must be > 0");
    check(t >= 0, "t must be >= 0");
    return I0 * std::exp(-t / tau);
}

double relaxation_time(double L_total, double R_s)
{
    check(L_total > 0, "L_total must be > 0");
    check(R_s > 0, "R_s must be > 0");
    return L_total / R_s;
}

double closing_kick(std::int64_t n, double x)
{
    if (!std::isfinite(x)) throw std::domain_error("flux ratio must be finite");
    return 2.0 * std::numbers::pi * codata.hbar * (static_cast<double>(n) - x);
}

SwitchTrace simulate(const ring::RingSpec& rs, const ring::MaterialSpec& mat, double T,
                     double phi_ext, const SegmentSpec& seg, const SwitchSchedule& sched,
                     double sample_dt, const NSelection& sel)
{
    check(seg.R_s > 0, "SegmentSpec: R_s must be > 0");
    check(seg.l_s > 0 && seg.l_s < 2.0 * std::numbers::pi * rs.radius,
          "SegmentSpec: l_s must be in (0, circumference)");
    check(sched.omega_sw > 0, "SwitchSchedule: omega_sw must be > 0");
    check(sched.duration > 0, "SwitchSchedule: duration must be > 0");
    check(sched.duty_normal > 0 && sched.duty_normal < 1,
          "SwitchSchedule: duty_normal must be in (0, 1)");
    check(sample_dt > 0, "sample_dt must be > 0");

    const double phi0 = flux_quantum(mat.q_pair);
    const double x = phi_ext / phi0;
    const double L = ring::total_inductance(rs, mat, T);
    const double tau = relaxation_time(L, seg.R_s);
    const bool periodic = sched.mode == ScheduleMode::periodic;

    Rng rng(sched.seed);

    auto select_n = [&]() -> std::int64_t {
        switch (sel.policy) {
        case NPolicy::fixed:
            return sel.n_fixed;
        case NPolicy::ground:
            return ring::equilibrium_n(x).n;
        case NPolicy::doublet: {
            const auto eq = ring::equilibrium_n(x);
            if (eq.degenerate && rng.coin()) return eq.n + 1;
            return eq.n;
        }
        case NPolicy::thermal: {
            const auto w = ring::thermal_weights(x, T, rs, mat);
            double u_draw = rng.uniform(), cum = 0.0;
            for (const auto& [n, wn] : w) {
                cum += wn;
                if (u_draw < cum) return n;
            }
            return w.back().first;
        }
        }
        return 0;
    };
    auto quantized_current = [&](std::int64_t n) {
        return ring::fluxoid_solve(rs, mat, T, phi_ext, n).current;
    };

    SwitchTrace tr;
    tr.duration = sched.duration;
    tr.tau = tau;
    tr.L_total = L;
    tr.R_s = seg.R_s;
    tr.x = x;

    Kahan v_int, i_int;
    std::size_t ks = 0;  // next sample index, t_k = ks * sample_dt
    auto emit_before = [&](double t_limit, auto&& value) {
        for (double tk; (tk = static_cast<double>(ks) * sample_dt) < t_limit; ++ks) {
            auto [cur, volt] = value(tk);
            tr.samples.push_back({tk, cur, volt});
        }
    };

    const double mean_n = sched.duty_normal / sched.omega_sw;
    const double mean_s = (1.0 - sched.duty_normal) / sched.omega_sw;

    double t = 0.0;
    std::int64_t n_cur = select_n();  // state of the ring closed just before t = 0
    double I = quantized_current(n_cur);
    double I_final = I, V_final = 0.0;

    while (t < sched.duration) {
        // segment goes normal
        tr.events.push_back({t, true});
        const double dwell_n = periodic ? mean_n : rng.exponential(mean_n);
        if (dwell_n < 1e-6 * tau) tr.warn_short_interval = true;

        const double t_close = t + dwell_n;
        const bool cut = !(t_close < sched.duration);
        const double t_end = cut ? sched.duration : t_close;
        const double span = t_end - t;
        const double grow = -std::expm1(-span / tau);  // 1 - e^{-span/tau}
        const double I_end = I * std::exp(-span / tau);
        const double vint = seg.R_s * I * tau * grow;
        tr.intervals.push_back({t, t_end, I, I_end, vint});
        v_int.add(vint);
        i_int.add(tau * I * grow);
        {
            const double t0 = t, I0 = I;
            emit_before(t_end, [&](double tk) {
                const double cur = I0 * std::exp(-(tk - t0) / tau);
                return std::pair{cur, seg.R_s * cur};
            });
        }
        if (cut) {
            I_final = I_end;
            V_final = seg.R_s * I_end;
            t = sched.duration;
            break;
        }

        // wave function closes, current resets to the quantized value
        t = t_close;
        n_cur = select_n();
        tr.events.push_back({t, false});
        tr.kick_momenta.push_back(closing_kick(n_cur, x));
        tr.n_selected.push_back(n_cur);
        I = quantized_current(n_cur);

        const double dwell_s = periodic ? mean_s : rng.exponential(mean_s);
        if (dwell_s < 1e-6 * tau) tr.warn_short_interval = true;
        const double t_open = t + dwell_s;
        const double t_sc_end = std::min(t_open, sched.duration);
        i_int.add(I * (t_sc_end - t));
        emit_before(t_sc_end, [&](double) { return std::pair{I, 0.0}; });
        I_final = I;
        V_final = 0.0;
        t = t_open;
    }

    // trailing samples, including one exactly at the end of the trace
    emit_before(std::nextafter(sched.duration, HUGE_VAL),
                [&](double) { return std::pair{I_final, V_final}; });

    tr.voltage_integral = v_int.get();
    tr.current_integral = i_int.get();
    return tr;
}

namespace {

void check_nonempty(const SwitchTrace& tr)
{
    if (tr.duration <= 0 || (tr.events.empty() && tr.samples.empty()))
        throw std::domain_error("empty trace");
}

}  // namespace

double v_dc(const SwitchTrace& tr)
{
    check_nonempty(tr);
    return tr.voltage_integral / tr.duration;
}

double mean_current(const SwitchTrace& tr)
{
    check_nonempty(tr);
    return tr.current_integral / tr.duration;
}

double quantum_force_circulation(const SwitchTrace& tr)
{
    if (tr.kick_momenta.empty())
        throw std::domain_error("trace contains no closings");
    Kahan sum;
    for (double k : tr.kick_momenta) sum.add(k);
    return sum.get() / tr.duration;
}

std::vector<FluxPoint> vdc_vs_flux(const ring::RingSpec& rs, const ring::MaterialSpec& mat,
                                   double T, const SegmentSpec& seg,
                                   const SwitchSchedule& sched,
                                   const std::vector<double>& x_grid, const NSelection& sel)
{
    check(!x_grid.empty(), "flux grid must be non-empty");
    const double phi0 = flux_quantum(mat.q_pair);
    const double dt = sched.duration;  // samples are not needed for the average

    std::vector<FluxPoint> out;
    out.reserve(x_grid.size());
    for (double x : x_grid) {
        const auto eq = ring::equilibrium_n(x);
        double v;
        if (eq.degenerate && sched.mode == ScheduleMode::periodic &&
            sel.policy == NPolicy::ground) {
            // average the two tied branches; evaluating at the flux reduced by
            // the integer part makes the branch currents negate exactly
            const double phi = (x - std::floor(x)) * phi0;
            NSelection lo{NPolicy::fixed, 0}, hi{NPolicy::fixed, 1};
            v = 0.5 * (v_dc(simulate(rs, mat, T, phi, seg, sched, dt, lo)) +
                       v_dc(simulate(rs, mat, T, phi, seg, sched, dt, hi)));
        } else {
            v = v_dc(simulate(rs, mat, T, x * phi0, seg, sched, dt, sel));
        }
        out.push_back({x, v});
    }
    return out;
}

}  // namespace fluxring::switching
