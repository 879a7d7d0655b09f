#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "core/network.hpp"
#include "core/rng.hpp"

using namespace alife;

namespace {

Genome random_genome(Rng& rng, double scale = 3.0) {
  Genome g;
  for (double& w : g.weights) w = (2.0 * rng.uniform_double() - 1.0) * scale;
  return g;
}

SensoryVector random_input(Rng& rng) {
  SensoryVector x;
  for (int i = 0; i < 5; ++i) x[i] = rng.uniform_index(2) ? 1.0 : 0.0;
  for (int i = 5; i < kSensorCount; ++i) x[i] = rng.uniform_double();
  return x;
}

double raw_score(const Genome& g, const SensoryVector& x, int action) {
  double s = 0.0;
  for (int i = 0; i < kSensorCount; ++i) s += g.weights[action * kSensorCount + i] * x[i];
  return s;
}

}  // namespace

TEST_CASE("zero genome is indifferent: all outputs 0.5, action rest") {
  const Genome g{};
  SensoryVector x{};
  x[kSenseFoodHere] = 1.0;
  x[kSenseMotivationFood] = 1.0;
  const NetworkOutputs out = forward(g, x);
  for (double o : out) CHECK(o == 0.5);
  CHECK(select_action(out) == Action::kRest);
}

TEST_CASE("single active synapse produces the logistic of its weight") {
  Genome g{};
  g.at(Action::kEat, kSenseFoodHere) = 8.0;
  SensoryVector x{};
  x[kSenseFoodHere] = 1.0;
  const NetworkOutputs out = forward(g, x);
  CHECK(out[action_index(Action::kEat)] ==
        doctest::Approx(0.9996646498695336).epsilon(1e-15));
  for (int a = 0; a < kActionCount; ++a)
    if (a != action_index(Action::kEat)) CHECK(out[a] == 0.5);
  CHECK(select_action(out) == Action::kEat);
}

TEST_CASE("logistic symmetry: f(s) + f(-s) == 1") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Genome g = random_genome(rng);
    Genome neg = g;
    for (double& w : neg.weights) w = -w;
    const SensoryVector x = random_input(rng);
    const NetworkOutputs a = forward(g, x);
    const NetworkOutputs b = forward(neg, x);
    for (int i = 0; i < kActionCount; ++i)
      CHECK(a[i] + b[i] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("outputs always lie in (0, 1)") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const NetworkOutputs out = forward(random_genome(rng, 50.0), random_input(rng));
    for (double o : out) {
      CHECK(o >= 0.0);
      CHECK(o <= 1.0);
    }
  }
}

TEST_CASE("selection matches the argmax of raw scores") {
  // The logistic is monotone, so picking the largest output must agree with
  // picking the largest weighted input sum.
  Rng rng(4711);
  for (int trial = 0; trial < 1000; ++trial) {
    const Genome g = random_genome(rng);
    const SensoryVector x = random_input(rng);
    int best = 0;
    for (int a = 1; a < kActionCount; ++a)
      if (raw_score(g, x, a) > raw_score(g, x, best)) best = a;
    CHECK(select_action(forward(g, x)) == static_cast<Action>(best));
  }
}

TEST_CASE("uniform weight scaling never changes the selected action") {
  Rng rng(31337);
  for (int trial = 0; trial < 500; ++trial) {
    const Genome g = random_genome(rng);
    const SensoryVector x = random_input(rng);
    const Action base = select_action(forward(g, x));
    for (double scale : {0.5, 3.0}) {
      Genome scaled = g;
      for (double& w : scaled.weights) w *= scale;
      CHECK(select_action(forward(scaled, x)) == base);
    }
  }
}

TEST_CASE("ties break toward the lower action index") {
  NetworkOutputs out{};
  out.fill(0.5);
  CHECK(select_action(out) == Action::kRest);
  out[action_index(Action::kMoveLeft)] = 0.9;
  out[action_index(Action::kMoveRight)] = 0.9;
  CHECK(select_action(out) == Action::kMoveLeft);
  out[action_index(Action::kMateRight)] = 0.95;
  CHECK(select_action(out) == Action::kMateRight);
}

TEST_CASE("forward is deterministic") {
  Rng rng(8);
  const Genome g = random_genome(rng);
  const SensoryVector x = random_input(rng);
  const NetworkOutputs a = forward(g, x);
  const NetworkOutputs b = forward(g, x);
  CHECK(a == b);
}
