#pragma once

#include "asymptotics.hpp"
#include "circle_method.hpp"
#include "core.hpp"
#include "exact_polynomials.hpp"
#include "multiprecision.hpp"
#include "parallel.hpp"
#include "phase_geometry.hpp"
#include "quadrature.hpp"
#include "verification.hpp"
#include "special_functions.hpp"
#include "zeros.hpp"
