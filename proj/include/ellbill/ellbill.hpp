#pragma once

// Umbrella header for the geometry, solver and simulation layers. The CLI
// layer (ellbill/cli/) is separate because it pulls in a JSON library.

#include "ellbill/billiard.hpp"
#include "ellbill/certificate.hpp"
#include "ellbill/conics.hpp"
#include "ellbill/error.hpp"
#include "ellbill/geometry.hpp"
#include "ellbill/marden.hpp"
#include "ellbill/point.hpp"
#include "ellbill/quad_solver.hpp"
#include "ellbill/triangle_solver.hpp"
