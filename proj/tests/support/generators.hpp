#pragma once

// Seeded deterministic generators shared by the unit tests and the
// acceptance suite. Everything draws from an explicit engine so that runs
// and shards are reproducible.

#include "tamefit/finite_modules.hpp"
#include "tamefit/group_ring.hpp"
#include "tamefit/ideal_lattice.hpp"
#include "tamefit/linalg.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace tamefit::testgen {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0x5eedfeed2024ull;

inline Integer random_int(Rng& rng, long lo, long hi) {
    return Integer(std::uniform_int_distribution<long>(lo, hi)(rng));
}

inline Rational random_rational(Rng& rng, long num_bound = 40, long den_bound = 12) {
    Rational r(random_int(rng, -num_bound, num_bound), random_int(rng, 1, den_bound));
    r.canonicalize();
    return r;
}

inline GroupRingElement random_integral_element(Rng& rng, long bound = 20) {
    return {Rational(random_int(rng, -bound, bound)),
            Rational(random_int(rng, -bound, bound))};
}

inline GroupRingElement random_rational_element(Rng& rng) {
    return {random_rational(rng), random_rational(rng)};
}

/// Nonzero integral ideal spanned by one to three random elements; redraws
/// when the span is rank deficient.
inline GroupRingIdeal random_integral_ideal(Rng& rng, long bound = 20) {
    for (;;) {
        std::size_t count = 1 + rng() % 3;
        std::vector<GroupRingElement> gens;
        for (std::size_t i = 0; i < count; ++i)
            gens.push_back(random_integral_element(rng, bound));
        try {
            GroupRingIdeal ideal = GroupRingIdeal::from_generators(gens);
            if (!ideal.is_zero()) return ideal;
        } catch (const std::invalid_argument&) {
            // rank-1 span, try again
        }
    }
}

inline std::vector<Integer> random_factor_chain(Rng& rng, std::size_t max_rank,
                                                long max_factor) {
    std::size_t r = 1 + rng() % max_rank;
    std::vector<Integer> factors{random_int(rng, 2, max_factor)};
    for (std::size_t i = 1; i < r; ++i) {
        long room = std::max(1L, max_factor / static_cast<long>(factors.back().get_si()));
        factors.push_back(factors.back() * random_int(rng, 1, room));
    }
    return factors;
}

/// Draws the action as identity plus a correction respecting the order
/// constraints, rejecting until it squares to the identity. Falls back to a
/// diagonal +-1 involution if rejection runs long.
inline IntMat random_involution_on(Rng& rng, const std::vector<Integer>& factors) {
    const std::size_t r = factors.size();
    for (int attempt = 0; attempt < 600; ++attempt) {
        IntMat u(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                // entries below the diagonal must be multiples of d_i / d_j
                Integer step = i > j ? Integer(factors[i] / factors[j]) : Integer(1);
                long residues = Integer(factors[i] / step).get_si();
                Integer value = i == j ? 1 : 0;
                if (rng() % 2) value += step * random_int(rng, 0, residues - 1);
                u.at(i, j) = value;
            }
        if (AbelianTauModule::is_valid_action(factors, u)) return u;
    }
    IntMat u = IntMat::identity(r);
    for (std::size_t i = 0; i < r; ++i)
        if (rng() % 2) u.at(i, i) = factors[i] - 1;
    return u;
}

inline AbelianTauModule random_tau_module(Rng& rng, std::size_t max_rank = 3,
                                          long max_factor = 16) {
    std::vector<Integer> factors = random_factor_chain(rng, max_rank, max_factor);
    return AbelianTauModule(factors, random_involution_on(rng, factors));
}

inline AbelianTauModule random_two_power_module(Rng& rng, std::size_t max_rank = 3,
                                                long max_exp = 4) {
    std::size_t r = 1 + rng() % max_rank;
    std::vector<long> exps;
    for (std::size_t i = 0; i < r; ++i)
        exps.push_back(1 + static_cast<long>(rng() % max_exp));
    std::sort(exps.begin(), exps.end());
    std::vector<Integer> factors;
    for (long e : exps) factors.push_back(pow2(e));
    return AbelianTauModule(factors, random_involution_on(rng, factors));
}

/// Coordinates of a uniformly random element of order exactly 2 in a
/// 2-group: each coordinate 0 or d_i/2, not all 0.
inline std::vector<Integer> random_order_two_element(Rng& rng, const AbelianTauModule& m) {
    for (;;) {
        std::vector<Integer> coords(m.rank(), Integer(0));
        bool any = false;
        for (std::size_t i = 0; i < m.rank(); ++i)
            if (rng() % 2) {
                coords[i] = m.invariant_factors()[i] / 2;
                any = true;
            }
        if (any) return coords;
    }
}

}  // namespace tamefit::testgen
