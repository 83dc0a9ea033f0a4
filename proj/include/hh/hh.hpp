#pragma once

// Everything except the JSON front end (hh/cli.hpp).

#include "hh/algebra.hpp"
#include "hh/envelope.hpp"
#include "hh/error.hpp"
#include "hh/families.hpp"
#include "hh/geometry.hpp"
#include "hh/hochschild.hpp"
#include "hh/linalg.hpp"
#include "hh/quiver.hpp"
#include "hh/reps.hpp"
#include "hh/resolution.hpp"
