#pragma once

#include <cstdint>

#include "tswarp/types.hpp"

namespace tswarp {

enum class GenKind { Ram, Cbf, Iid };

/// Generator parameters. Output is a pure function of this struct, seed
/// included; the same parameters always produce the identical dataset.
struct GenParams {
    GenKind kind = GenKind::Ram;
    std::size_t dim = 1;
    std::size_t length = 100;
    std::size_t classes = 50;
    std::size_t reps = 2;
    double noise_sigma = 0.0;
    std::size_t distortion = 25;  // max temporal displacement, in indices
    double radius = 50.0;         // spatial extent of RAM trajectories
    std::uint64_t seed = 0;
};

/**
 * Random-acceleration-model generator: each class owns a prototype
 * trajectory obtained by twice integrating i.i.d. Gaussian accelerations
 * per dimension and rescaling it into the origin-centered ball of the
 * given radius. Each representative resamples the prototype through a
 * random monotone time warp displacing indices by at most `distortion`,
 * then adds i.i.d. Gaussian noise.
 */
[[nodiscard]] Dataset gen_ram(const GenParams& p);

/**
 * Cylinder-bell-funnel generator, extended to k dimensions: a class is a
 * k-tuple of shape assignments (so at most 3^k classes exist), each
 * dimension carrying one shape at a class-specific random onset and
 * duration. Representatives perturb onset and duration uniformly within
 * +-distortion indices and add Gaussian noise.
 */
[[nodiscard]] Dataset gen_cbf(const GenParams& p);

/// `count` unlabeled series of i.i.d. standard-normal k-vectors; the
/// substrate for the Monte Carlo experiments.
[[nodiscard]] Dataset gen_iid_gaussian(std::size_t dim, std::size_t length, std::size_t count,
                                       std::uint64_t seed);

/// Dispatch on p.kind; for Iid the series count is classes * reps.
[[nodiscard]] Dataset gen_dataset(const GenParams& p);

}  // namespace tswarp
