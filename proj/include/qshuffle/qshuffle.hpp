#pragma once

// Umbrella header.

#include <qshuffle/laurent.hpp>
#include <qshuffle/rootdata.hpp>
#include <qshuffle/words.hpp>
#include <qshuffle/shuffle.hpp>
#include <qshuffle/thetamod.hpp>
#include <qshuffle/linalg.hpp>
#include <qshuffle/bases.hpp>
#include <qshuffle/characters.hpp>
#include <qshuffle/oklrsym.hpp>
#include <qshuffle/verify.hpp>
#include <qshuffle/json_io.hpp>
#include <qshuffle/cache.hpp>
