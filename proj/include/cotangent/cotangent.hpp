#pragma once

#include "cotangent/acceptance.hpp"
#include "cotangent/blowup.hpp"
#include "cotangent/errors.hpp"
#include "cotangent/exact.hpp"
#include "cotangent/fixtures.hpp"
#include "cotangent/formulas.hpp"
#include "cotangent/harrison.hpp"
#include "cotangent/resgraph.hpp"
#include "cotangent/series.hpp"
