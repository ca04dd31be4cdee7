#pragma once

#include "colocal/error.hpp"
#include "colocal/graph.hpp"
#include "colocal/graph_ops.hpp"
#include "colocal/graph_json.hpp"
#include "colocal/sim.hpp"
#include "colocal/probes.hpp"
#include "colocal/star_forest.hpp"
#include "colocal/matching.hpp"
#include "colocal/matching_scheme.hpp"
#include "colocal/odd_delta.hpp"
#include "colocal/oracles.hpp"
#include "colocal/generators.hpp"
#include "colocal/dot.hpp"
#include "colocal/report.hpp"
