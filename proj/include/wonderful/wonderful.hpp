#pragma once

#include "action.hpp"
#include "bijection.hpp"
#include "block.hpp"
#include "cliques.hpp"
#include "closure.hpp"
#include "cohomology.hpp"
#include "errors.hpp"
#include "generating.hpp"
#include "json_io.hpp"
#include "laminar.hpp"
#include "mask.hpp"
#include "multipoly.hpp"
#include "orbits.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "rooted_trees.hpp"
#include "series.hpp"
#include "stirling.hpp"
#include "verify.hpp"
