#pragma once

#include "alca/analysis.hpp"
#include "alca/approx.hpp"
#include "alca/behavior.hpp"
#include "alca/domino.hpp"
#include "alca/errors.hpp"
#include "alca/fixtures.hpp"
#include "alca/io.hpp"
#include "alca/machine.hpp"
#include "alca/reach.hpp"
#include "alca/timed.hpp"
#include "alca/timeset.hpp"
#include "alca/word.hpp"
