#pragma once

// Umbrella header: finite-ring construction, ideal lattice, the inverse
// engine, the theorem harness and the counterexample miner.

#include "bcinv/harness.hpp"
#include "bcinv/inverses.hpp"
#include "bcinv/miner.hpp"
#include "bcinv/ring.hpp"
#include "bcinv/subset.hpp"
#include "bcinv/tables.hpp"
