#pragma once

#include "hydro/grid.hpp"

namespace hydro {

/// Solves Lap_H p = -(grad_H grad_H) : S with S the vertical mean of u_H (x) u_H.
/// p is z-independent, even, and has zero horizontal mean. Products are dealiased.
ScalarField solve_pressure(const ScalarField& u, const ScalarField& v);

/// Same solve from given stress components; only their vertical means matter.
ScalarField pressure_from_stress(const ScalarField& sxx, const ScalarField& sxy, const ScalarField& syy);

}  // namespace hydro
