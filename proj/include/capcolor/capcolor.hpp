#pragma once

#include "capcolor/color_map.hpp"
#include "capcolor/coloring.hpp"
#include "capcolor/decomposition.hpp"
#include "capcolor/dimacs.hpp"
#include "capcolor/error.hpp"
#include "capcolor/generators.hpp"
#include "capcolor/graph.hpp"
#include "capcolor/oracles.hpp"
