#pragma once

#include "charfun.hpp"
#include "errors.hpp"
#include "fracops.hpp"
#include "initial_data.hpp"
#include "kernel.hpp"
#include "laplace_oracle.hpp"
#include "params.hpp"
#include "quadrature.hpp"
#include "rootfinder.hpp"
#include "solver.hpp"
#include "specfun.hpp"
