#pragma once

#include "refgeo/angles.hpp"
#include "refgeo/field.hpp"
#include "refgeo/wbg.hpp"
#include "refgeo/decomposition_io.hpp"
#include "refgeo/svg.hpp"
#include "refgeo/scenario.hpp"
