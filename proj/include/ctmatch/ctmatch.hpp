#pragma once

// Multiple-pattern Cartesian tree matching.

#include "common.hpp"
#include "representations.hpp"
#include "fingerprints.hpp"
#include "analysis.hpp"
#include "patterns.hpp"
#include "tables.hpp"
#include "scan.hpp"
#include "wu_manber.hpp"
#include "rabin_karp.hpp"
#include "alpha_skip.hpp"
#include "naive.hpp"
#include "parallel.hpp"
#include "random.hpp"
#include "harness.hpp"
