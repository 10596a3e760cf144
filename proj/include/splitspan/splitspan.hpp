#pragma once

#include "rational.hpp"
#include "matrix.hpp"
#include "lp.hpp"
#include "polyhedron.hpp"
#include "config.hpp"
#include "splits.hpp"
#include "ksplit.hpp"
#include "secondary.hpp"
#include "gale.hpp"
#include "hypersimplex.hpp"
