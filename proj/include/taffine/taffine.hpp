#pragma once
// Umbrella header.

#include "taffine/errors.hpp"
#include "taffine/scalar.hpp"
#include "taffine/weight.hpp"
#include "taffine/linalg.hpp"
#include "taffine/rootvec.hpp"
#include "taffine/rootsys.hpp"
#include "taffine/subsystems.hpp"
#include "taffine/decomp.hpp"
#include "taffine/supportcalc.hpp"
#include "taffine/examplecase.hpp"
