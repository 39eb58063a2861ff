#pragma once

#include "cdlat/bitset.hpp"
#include "cdlat/catalog.hpp"
#include "cdlat/chermak_delgado.hpp"
#include "cdlat/density.hpp"
#include "cdlat/errors.hpp"
#include "cdlat/group.hpp"
#include "cdlat/lattice.hpp"
#include "cdlat/permutation.hpp"
#include "cdlat/report.hpp"
#include "cdlat/survey.hpp"
