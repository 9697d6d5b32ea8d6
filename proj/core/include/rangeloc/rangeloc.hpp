#pragma once

#include "config.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "kummer.hpp"
#include "param_space.hpp"
#include "sim.hpp"
#include "solution.hpp"
#include "tdoa.hpp"
#include "toa_3d.hpp"
#include "toa_three.hpp"
#include "toa_two.hpp"
#include "tolerance.hpp"
