#pragma once

#include "qwi/analytical_engine.hpp"
#include "qwi/benchmark.hpp"
#include "qwi/double_barrier.hpp"
#include "qwi/errors.hpp"
#include "qwi/iterative_engine.hpp"
#include "qwi/profile.hpp"
#include "qwi/region_params.hpp"
#include "qwi/spectrum.hpp"
#include "qwi/transfer_matrix_oracle.hpp"
#include "qwi/units.hpp"
