#pragma once

#include "algmodel.hpp"
#include "character.hpp"
#include "divisor.hpp"
#include "ellcoh.hpp"
#include "lattice.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "repr.hpp"
