#pragma once

#include "quadlab/domination.hpp"
#include "quadlab/error.hpp"
#include "quadlab/generators.hpp"
#include "quadlab/matrix_io.hpp"
#include "quadlab/orthogonality.hpp"
#include "quadlab/parallel.hpp"
#include "quadlab/sweep.hpp"
#include "quadlab/symbol_search.hpp"
#include "quadlab/theorems.hpp"
#include "quadlab/tournament.hpp"
#include "quadlab/vertex_set.hpp"
