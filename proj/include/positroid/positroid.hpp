#pragma once

#include "positroid/subset.hpp"
#include "positroid/necklace.hpp"
#include "positroid/decorated_permutation.hpp"
#include "positroid/le_diagram.hpp"
#include "positroid/lattice_path.hpp"
#include "positroid/flag.hpp"
#include "positroid/random.hpp"
