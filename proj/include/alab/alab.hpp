#pragma once

// Umbrella header.

#include "alab/alteration.hpp"
#include "alab/board.hpp"
#include "alab/clique.hpp"
#include "alab/copy_index.hpp"
#include "alab/density.hpp"
#include "alab/embedding.hpp"
#include "alab/experiments/concentration.hpp"
#include "alab/experiments/game_experiment.hpp"
#include "alab/experiments/output.hpp"
#include "alab/experiments/params.hpp"
#include "alab/experiments/runner.hpp"
#include "alab/experiments/tail.hpp"
#include "alab/experiments/witness.hpp"
#include "alab/games/online_ramsey.hpp"
#include "alab/games/rps.hpp"
#include "alab/games/transcript.hpp"
#include "alab/graph.hpp"
#include "alab/hypergraph.hpp"
#include "alab/io.hpp"
#include "alab/packing.hpp"
#include "alab/patterns.hpp"
#include "alab/random.hpp"
#include "alab/random_graphs.hpp"
