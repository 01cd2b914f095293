#pragma once

#include "cfcolor/bench.hpp"
#include "cfcolor/exact.hpp"
#include "cfcolor/generators.hpp"
#include "cfcolor/graph.hpp"
#include "cfcolor/io.hpp"
#include "cfcolor/line_cf.hpp"
#include "cfcolor/lower_bound.hpp"
#include "cfcolor/near_regular.hpp"
#include "cfcolor/pseudoforest.hpp"
#include "cfcolor/random.hpp"
#include "cfcolor/verify.hpp"
