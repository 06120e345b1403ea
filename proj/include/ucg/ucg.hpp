#pragma once

#include "ucg/analysis.hpp"
#include "ucg/appendage.hpp"
#include "ucg/brute_force.hpp"
#include "ucg/construction.hpp"
#include "ucg/cover_search.hpp"
#include "ucg/covering.hpp"
#include "ucg/enumerate.hpp"
#include "ucg/error.hpp"
#include "ucg/families.hpp"
#include "ucg/graph.hpp"
#include "ucg/io.hpp"
#include "ucg/report.hpp"
