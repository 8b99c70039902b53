#pragma once

#include "ladder/errors.hpp"
#include "ladder/parallel.hpp"

#include "ladder/gol/bitwise.hpp"
#include "ladder/gol/grid.hpp"
#include "ladder/gol/iterate.hpp"
#include "ladder/gol/step.hpp"

#include "ladder/histogram/histogram.hpp"
#include "ladder/histogram/variants.hpp"

#include "ladder/knn/bitonic.hpp"
#include "ladder/knn/serialize.hpp"
#include "ladder/knn/types.hpp"
#include "ladder/knn/variants.hpp"

#include "ladder/workload/generate.hpp"
#include "ladder/workload/io.hpp"
#include "ladder/workload/rng.hpp"

#include "ladder/bench/harness.hpp"
#include "ladder/bench/params.hpp"
#include "ladder/bench/registry.hpp"
#include "ladder/bench/report.hpp"
