#pragma once

#include "isogon/geometry.hpp"
#include "isogon/io.hpp"
#include "isogon/polygon.hpp"
#include "isogon/regular.hpp"
#include "isogon/symmetrize.hpp"
#include "isogon/triangle.hpp"
