#pragma once

#include "compnum/analyze.hpp"
#include "compnum/bitset.hpp"
#include "compnum/certify.hpp"
#include "compnum/competition.hpp"
#include "compnum/errors.hpp"
#include "compnum/generate.hpp"
#include "compnum/graph.hpp"
#include "compnum/graph6.hpp"
#include "compnum/holes.hpp"
#include "compnum/holespace.hpp"
#include "compnum/json_io.hpp"
#include "compnum/matching.hpp"
#include "compnum/sweep.hpp"
