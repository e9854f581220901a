#pragma once

#include "eds/bench.hpp"
#include "eds/generators.hpp"
#include "eds/graph.hpp"
#include "eds/mst.hpp"
#include "eds/oracle.hpp"
#include "eds/strata.hpp"
#include "eds/validation.hpp"
