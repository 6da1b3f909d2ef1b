#pragma once

#include "circle_sqm/compensated.hpp"
#include "circle_sqm/coulomb.hpp"
#include "circle_sqm/errors.hpp"
#include "circle_sqm/geometry.hpp"
#include "circle_sqm/numerics/contraction.hpp"
#include "circle_sqm/numerics/quadrature.hpp"
#include "circle_sqm/numerics/report.hpp"
#include "circle_sqm/numerics/residual.hpp"
#include "circle_sqm/numerics/richardson.hpp"
#include "circle_sqm/numerics/tridiagonal.hpp"
#include "circle_sqm/numerics/validation.hpp"
#include "circle_sqm/oscillator.hpp"
#include "circle_sqm/specfun.hpp"
