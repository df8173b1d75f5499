#pragma once

// Umbrella header for the whole library except the CLI layer, which pulls
// in the vendored argument parser and JSON writer and lives in cli.hpp.

#include "lenscap/contfrac.hpp"
#include "lenscap/errors.hpp"
#include "lenscap/formulas.hpp"
#include "lenscap/oracle.hpp"
#include "lenscap/rational.hpp"
#include "lenscap/render.hpp"
#include "lenscap/tree.hpp"
