#pragma once

// Umbrella header.
#include "igm/design_gram.hpp"
#include "igm/error.hpp"
#include "igm/linalg.hpp"
#include "igm/matrix.hpp"
#include "igm/methods.hpp"
#include "igm/prm.hpp"
#include "igm/rng.hpp"
#include "igm/simulation.hpp"
#include "igm/wls_oracle.hpp"
