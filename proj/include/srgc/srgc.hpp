#pragma once

// Umbrella header.

#include "srgc/circuit.hpp"
#include "srgc/cli.hpp"
#include "srgc/config.hpp"
#include "srgc/csv.hpp"
#include "srgc/elements.hpp"
#include "srgc/errors.hpp"
#include "srgc/linalg.hpp"
#include "srgc/semimonotone.hpp"
#include "srgc/solvers.hpp"
#include "srgc/srg.hpp"
