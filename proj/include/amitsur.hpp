#pragma once

#include "amitsur/bounds.hpp"
#include "amitsur/errors.hpp"
#include "amitsur/integer.hpp"
#include "amitsur/intlin.hpp"
#include "amitsur/latgroup.hpp"
#include "amitsur/numerical.hpp"
#include "amitsur/numpoly.hpp"
#include "amitsur/toric.hpp"
#include "amitsur/words.hpp"
