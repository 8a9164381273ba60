#pragma once

// Umbrella header for the dnamat library.

#include <dnamat/binomial.hpp>
#include <dnamat/bipoly.hpp>
#include <dnamat/dna.hpp>
#include <dnamat/hyperbola.hpp>
#include <dnamat/json_io.hpp>
#include <dnamat/linalg.hpp>
#include <dnamat/matrix.hpp>
#include <dnamat/rational.hpp>
#include <dnamat/verify.hpp>
