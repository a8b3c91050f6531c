#pragma once

#include <cstdint>
#include <vector>

#include "renlab/masses.hpp"

namespace renlab {

/// Uniform random law on the k-simplex (lattice spacings over 2^32); may
/// contain zero masses and strips trailing zeros, so the realized arity can
/// be below k. Exercises edge behavior.
MassVector spacing_mass(int k, std::uint64_t seed, std::uint64_t index);

/// Mixed law p_l = (3 w_l)/4 + 1/(4k) with w a uniform spacing draw: exact,
/// every p_l >= 1/(4k), hence p_1 > 0, aperiodic, and spectrally well inside
/// the disc (the convergence gap at n = 512 is far below 1e-6 for k <= 6).
/// The workhorse corpus for strict-inequality and limit properties.
MassVector floored_mass(int k, std::uint64_t seed, std::uint64_t index);

/// count laws cycling k over [k_min, k_max], floored or plain spacing draws.
std::vector<MassVector> make_corpus(std::uint64_t count, std::uint64_t seed, int k_min,
                                    int k_max, bool floored);

}  // namespace renlab
