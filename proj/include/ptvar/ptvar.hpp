#pragma once

// Umbrella header: the full variational toolkit for the family of
// non-Hermitian oscillators with potential -(ix)^N.

#include "ptvar/errors.hpp"
#include "ptvar/specfun.hpp"
#include "ptvar/domain.hpp"
#include "ptvar/closedform.hpp"
#include "ptvar/optimizer.hpp"
#include "ptvar/contour_quad.hpp"
#include "ptvar/susy.hpp"
#include "ptvar/ode_oracle.hpp"
#include "ptvar/reference.hpp"
#include "ptvar/format.hpp"
#include "ptvar/report.hpp"
#include "ptvar/acceptance.hpp"
