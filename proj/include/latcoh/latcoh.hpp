#pragma once

#include "latcoh/integer.hpp"
#include "latcoh/matrix.hpp"
#include "latcoh/smith.hpp"
#include "latcoh/subquotient.hpp"
#include "latcoh/exterior.hpp"
#include "latcoh/lattice.hpp"
#include "latcoh/cohomology.hpp"
#include "latcoh/free_group.hpp"
#include "latcoh/alpha.hpp"
#include "latcoh/lhs.hpp"
#include "latcoh/sampling.hpp"
#include "latcoh/spec_file.hpp"
#include "latcoh/verify.hpp"
