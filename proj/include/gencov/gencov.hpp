#pragma once

#include "gencov/bounds.hpp"
#include "gencov/combinatorics.hpp"
#include "gencov/construct.hpp"
#include "gencov/core.hpp"
#include "gencov/coverage_index.hpp"
#include "gencov/error.hpp"
#include "gencov/graph.hpp"
#include "gencov/io.hpp"
#include "gencov/product.hpp"
#include "gencov/search.hpp"
#include "gencov/upper_bounds.hpp"
#include "gencov/verify.hpp"
