#pragma once

#include <doctest.h>

// doctest's Approx defaults to scale 1.0, which acts as an absolute tolerance
// for values far below 1; physical magnitudes here go down to 1e-49.
inline doctest::Approx rel(double value, double eps = 1e-12)
{
    return doctest::Approx(value).epsilon(eps).scale(0.0);
}
