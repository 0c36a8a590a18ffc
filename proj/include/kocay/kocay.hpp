#pragma once

#include "common.hpp"
#include "graph.hpp"
#include "colored_graph.hpp"
#include "counting.hpp"
#include "covering.hpp"
#include "graph6.hpp"
#include "reconstruct.hpp"
