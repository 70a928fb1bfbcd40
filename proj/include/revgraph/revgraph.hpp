#pragma once

#include "revgraph/error.hpp"
#include "revgraph/perm.hpp"
#include "revgraph/genome.hpp"
#include "revgraph/fourreg.hpp"
#include "revgraph/graphs.hpp"
#include "revgraph/localcomp.hpp"
#include "revgraph/oracle.hpp"
#include "revgraph/sorter.hpp"
#include "revgraph/dm.hpp"
#include "revgraph/dcj.hpp"
