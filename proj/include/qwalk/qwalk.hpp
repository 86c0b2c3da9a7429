#pragma once

// Umbrella header for the coined quantum walk library.

#include "config.hpp"
#include "errors.hpp"
#include "evolution.hpp"
#include "experiment.hpp"
#include "metrics.hpp"
#include "noise.hpp"
#include "operators.hpp"
#include "path_sum.hpp"
#include "selfcheck.hpp"
#include "state.hpp"
#include "topology.hpp"
