#pragma once

#include "lieslice/cascade.hpp"
#include "lieslice/chevalley.hpp"
#include "lieslice/linalg.hpp"
#include "lieslice/rational.hpp"
#include "lieslice/root_system.hpp"
#include "lieslice/seaweed.hpp"
#include "lieslice/simple_set.hpp"
#include "lieslice/slice.hpp"
#include "lieslice/suites.hpp"
#include "lieslice/survey.hpp"
#include "lieslice/verdict.hpp"
