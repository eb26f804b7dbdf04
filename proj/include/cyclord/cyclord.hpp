#pragma once

// Umbrella header; users should generally include only this file.

#include "mv_algebra.hpp"
#include "mv_structure.hpp"
#include "good_sequence.hpp"
#include "pco.hpp"
#include "lattice_quotient.hpp"
#include "pco_ops.hpp"
#include "correspondence.hpp"
#include "model_check.hpp"
#include "io.hpp"
