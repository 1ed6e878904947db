#pragma once

// Umbrella header. json_io.hpp is left out so that the core library does not
// require nlohmann::json; include it explicitly where JSON output is needed.

#include "classifier.hpp"
#include "coefficients.hpp"
#include "config.hpp"
#include "errors.hpp"
#include "grid.hpp"
#include "kernels.hpp"
#include "oracle.hpp"
#include "quadrature.hpp"
#include "ratio_engine.hpp"
#include "specfun.hpp"
#include "stochastic.hpp"
#include "verdict.hpp"
