#pragma once

// Umbrella header for the Baxter combinatorics engine.

#include "baxter/binary_tree.hpp"
#include "baxter/congruence.hpp"
#include "baxter/errors.hpp"
#include "baxter/harness.hpp"
#include "baxter/json_io.hpp"
#include "baxter/lattice_paths.hpp"
#include "baxter/limits.hpp"
#include "baxter/parallel.hpp"
#include "baxter/permutation.hpp"
#include "baxter/qpoly.hpp"
#include "baxter/rectangulation.hpp"
#include "baxter/words.hpp"
