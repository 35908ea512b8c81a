#pragma once

#include "uavnet/availability.hpp"
#include "uavnet/config.hpp"
#include "uavnet/coverage.hpp"
#include "uavnet/energy.hpp"
#include "uavnet/montecarlo.hpp"
#include "uavnet/numerics.hpp"
#include "uavnet/params.hpp"
#include "uavnet/rng.hpp"
#include "uavnet/sweep.hpp"
