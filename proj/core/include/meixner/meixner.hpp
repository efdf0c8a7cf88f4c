#pragma once

#include "meixner/foundations.hpp"
#include "meixner/plane_wave.hpp"
#include "meixner/polynomials.hpp"
#include "meixner/quadrature.hpp"
#include "meixner/recursion.hpp"
#include "meixner/second_kind.hpp"
#include "meixner/sturm_liouville.hpp"
#include "meixner/t_calculus.hpp"
#include "meixner/weight.hpp"
