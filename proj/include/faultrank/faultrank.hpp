#pragma once

#include "apfdd.hpp"
#include "centrality.hpp"
#include "community.hpp"
#include "error.hpp"
#include "fault_graph.hpp"
#include "graph_io.hpp"
#include "ids.hpp"
#include "prioritizer.hpp"
#include "ranking.hpp"
#include "structure.hpp"
