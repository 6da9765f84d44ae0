#pragma once

#include "equipart/errors.hpp"
#include "equipart/number_theory.hpp"
#include "equipart/dihedral.hpp"
#include "equipart/words.hpp"
#include "equipart/solution.hpp"
#include "equipart/jacobian.hpp"
#include "equipart/obstruction.hpp"
#include "equipart/dickson.hpp"
#include "equipart/bounds.hpp"
