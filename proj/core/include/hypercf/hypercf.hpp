#pragma once

#include "hypercf/cfrac.hpp"
#include "hypercf/dual.hpp"
#include "hypercf/json_io.hpp"
#include "hypercf/lift.hpp"
#include "hypercf/linalg.hpp"
#include "hypercf/maps.hpp"
#include "hypercf/moments.hpp"
#include "hypercf/parallel.hpp"
#include "hypercf/poisson.hpp"
#include "hypercf/poly.hpp"
#include "hypercf/rational.hpp"
#include "hypercf/report.hpp"
#include "hypercf/series.hpp"
#include "hypercf/somos.hpp"
#include "hypercf/tau.hpp"
