#pragma once

#include "homometry/eberlein.hpp"
#include "homometry/fourier.hpp"
#include "homometry/limit_periodic.hpp"
#include "homometry/measure.hpp"
#include "homometry/oracle.hpp"
#include "homometry/rational.hpp"
#include "homometry/solver.hpp"
