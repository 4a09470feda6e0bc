#pragma once

// Exact calculator for Segre-type classes of unions of subschemes of
// projective space: blow-up push-forwards, inclusion-exclusion for union
// Segre classes, Chern-Schwartz-MacPherson classes of almost nonsingular
// unions, and the formal-series identities behind the defect formulas.

#include "basis.hpp"
#include "csm.hpp"
#include "cycle_class.hpp"
#include "formal_series.hpp"
#include "hpoly.hpp"
#include "identities.hpp"
#include "models.hpp"
#include "numeric.hpp"
#include "scenario.hpp"
#include "union_segre.hpp"
#include "verify.hpp"
