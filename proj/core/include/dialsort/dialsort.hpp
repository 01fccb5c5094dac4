#pragma once

#include "dialsort/baselines.hpp"
#include "dialsort/crn.hpp"
#include "dialsort/domain.hpp"
#include "dialsort/errors.hpp"
#include "dialsort/histogram.hpp"
#include "dialsort/parallel.hpp"
#include "dialsort/radix.hpp"
