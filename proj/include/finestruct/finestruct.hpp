#pragma once
// Umbrella header.

#include "contour.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "geometry.hpp"
#include "io.hpp"
#include "kernels.hpp"
#include "operators.hpp"
#include "quaternion.hpp"
#include "series.hpp"
#include "star.hpp"
#include "verify.hpp"
