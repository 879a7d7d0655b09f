#pragma once

#include "core/genome.hpp"

namespace alife {

// One-layer controller: every output neuron computes the logistic function of
// its weighted input sum. No bias, no hidden layer.
NetworkOutputs forward(const Genome& genome, const SensoryVector& input);

// Index of the largest output; ties go to the lower index, making Rest the
// default of an indifferent controller.
Action select_action(const NetworkOutputs& outputs);

}  // namespace alife
