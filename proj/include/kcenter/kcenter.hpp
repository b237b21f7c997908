#pragma once

// Umbrella header for the library (the CLI layer under kcenter/cli is not included).

#include "kcenter/core/bitset.hpp"
#include "kcenter/core/error.hpp"
#include "kcenter/core/types.hpp"
#include "kcenter/graph/distance.hpp"
#include "kcenter/graph/graph.hpp"
#include "kcenter/exact/oracle.hpp"
#include "kcenter/boolcover/boolcover.hpp"
#include "kcenter/approx/config.hpp"
#include "kcenter/approx/schedule.hpp"
#include "kcenter/approx/gonzalez.hpp"
#include "kcenter/approx/two_center.hpp"
#include "kcenter/approx/three_halves.hpp"
#include "kcenter/approx/step_search.hpp"
#include "kcenter/approx/weighted3.hpp"
#include "kcenter/approx/search.hpp"
#include "kcenter/gadget/setcover.hpp"
#include "kcenter/gadget/gadget.hpp"
#include "kcenter/gadget/random_graphs.hpp"
