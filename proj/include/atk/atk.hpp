// Umbrella header for the atk library.

#pragma once

#include "atk/centralizers.hpp"
#include "atk/conjugacy.hpp"
#include "atk/coxeter.hpp"
#include "atk/error.hpp"
#include "atk/garside.hpp"
#include "atk/io.hpp"
#include "atk/lattice.hpp"
#include "atk/ribbons.hpp"
#include "atk/words.hpp"
