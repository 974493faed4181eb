#pragma once

// Enumeration of maximal matchings under cardinality constraints.

#include "mmenum/blossom.hpp"
#include "mmenum/error.hpp"
#include "mmenum/generators.hpp"
#include "mmenum/graph.hpp"
#include "mmenum/hardness.hpp"
#include "mmenum/kbest.hpp"
#include "mmenum/matching.hpp"
#include "mmenum/maximum_enum.hpp"
#include "mmenum/oracle.hpp"
#include "mmenum/reverse_search.hpp"
#include "mmenum/sink.hpp"
#include "mmenum/store.hpp"
#include "mmenum/supergraph.hpp"
