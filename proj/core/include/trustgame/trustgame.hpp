#pragma once

// Umbrella header for the whole engine.

#include "trustgame/convergence.hpp"
#include "trustgame/equilibrium.hpp"
#include "trustgame/errors.hpp"
#include "trustgame/game.hpp"
#include "trustgame/geometry.hpp"
#include "trustgame/ibr.hpp"
#include "trustgame/rng.hpp"
#include "trustgame/sweep.hpp"
