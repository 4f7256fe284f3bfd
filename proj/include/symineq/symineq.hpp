#pragma once

#include "genfun.hpp"
#include "majorization.hpp"
#include "mellin.hpp"
#include "rational.hpp"
#include "spectral.hpp"
#include "sympoly.hpp"
#include "theorem1.hpp"
#include "vecnorm.hpp"
