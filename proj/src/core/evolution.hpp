#pragma once

#include "core/genome.hpp"
#include "core/params.hpp"
#include "core/rng.hpp"

namespace alife {

// Uniform crossover: each gene comes from parent_a or parent_b with equal
// probability, one draw per gene in gene order.
Genome recombine(const Genome& parent_a, const Genome& parent_b, Rng& rng);

// Additive mutation: every gene gets an independent uniform perturbation from
// [-mutation_intensity, +mutation_intensity], one draw per gene in gene order.
Genome mutate(const Genome& genome, double mutation_intensity, Rng& rng);

// Crossover followed by mutation; all 63 crossover draws happen before the
// 63 mutation draws.
Genome offspring_genome(const Genome& parent_a, const Genome& parent_b,
                        const EvolutionParams& params, Rng& rng);

// Hand-wired founder controller. It eats food under its feet, walks toward
// visible food (left wins a two-sided tie), jumps away when crowded on both
// sides, mates toward a single neighbor, and rests when there is nothing to
// do. All motivation inputs have zero weight, so its behavior is identical in
// both motivation modes.
Genome instinct_genome();

}  // namespace alife
