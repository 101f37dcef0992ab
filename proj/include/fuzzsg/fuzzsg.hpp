#pragma once

#include "fuzzsg/aut.hpp"
#include "fuzzsg/core.hpp"
#include "fuzzsg/counting.hpp"
#include "fuzzsg/element_set.hpp"
#include "fuzzsg/formulas.hpp"
#include "fuzzsg/fuzzy.hpp"
#include "fuzzsg/group.hpp"
#include "fuzzsg/lattice.hpp"
#include "fuzzsg/verify.hpp"
