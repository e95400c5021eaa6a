#pragma once

// Exact computations around matroid base polytopes: faces via factor-connected
// flags, flag vectors and cd-indices of the face lattices, hyperplane splits,
// and the rank-2 recursion.

#include "cd_index.hpp"
#include "composition.hpp"
#include "config.hpp"
#include "element_set.hpp"
#include "errors.hpp"
#include "face_lattice.hpp"
#include "json_io.hpp"
#include "matroid.hpp"
#include "nc_polynomial.hpp"
#include "poset.hpp"
#include "rank2.hpp"
#include "split.hpp"
#include "verify.hpp"
