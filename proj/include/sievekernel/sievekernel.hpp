#pragma once

#include "analytic.hpp"
#include "config.hpp"
#include "golden.hpp"
#include "majorant.hpp"
#include "oracle.hpp"
#include "rational.hpp"
#include "table.hpp"
#include "tau.hpp"
#include "taylor.hpp"
