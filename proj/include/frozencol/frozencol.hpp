#pragma once

#include "frozencol/error.hpp"
#include "frozencol/vertex_set.hpp"
#include "frozencol/graph.hpp"
#include "frozencol/io.hpp"
#include "frozencol/patterns.hpp"
#include "frozencol/isomorphism.hpp"
#include "frozencol/partition.hpp"
#include "frozencol/solvers.hpp"
#include "frozencol/families.hpp"
#include "frozencol/tables.hpp"
#include "frozencol/figures.hpp"
#include "frozencol/fixtures.hpp"
#include "frozencol/reconfig.hpp"
#include "frozencol/transform.hpp"
#include "frozencol/recolour.hpp"
#include "frozencol/search.hpp"
