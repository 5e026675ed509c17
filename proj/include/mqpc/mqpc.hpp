#pragma once

// Umbrella header for the circular d-level private-comparison simulator.

#include "mqpc/adversary.hpp"
#include "mqpc/cli.hpp"
#include "mqpc/experiment.hpp"
#include "mqpc/protocol.hpp"
#include "mqpc/qudit.hpp"
#include "mqpc/registry.hpp"
#include "mqpc/rng.hpp"
#include "mqpc/stats.hpp"
