#pragma once

#include "onevertex/arith.hpp"
#include "onevertex/bfile.hpp"
#include "onevertex/crosscheck.hpp"
#include "onevertex/formulas.hpp"
#include "onevertex/matchings.hpp"
#include "onevertex/oeis.hpp"
#include "onevertex/quadext.hpp"
#include "onevertex/series.hpp"
#include "onevertex/tables.hpp"
#include "onevertex/types.hpp"
