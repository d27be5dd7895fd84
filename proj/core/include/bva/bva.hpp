#pragma once

#include "bva/boundary.hpp"
#include "bva/centrality.hpp"
#include "bva/community.hpp"
#include "bva/error.hpp"
#include "bva/generators.hpp"
#include "bva/graph.hpp"
#include "bva/pipeline.hpp"
#include "bva/report.hpp"
#include "bva/rng.hpp"
#include "bva/temporal.hpp"
#include "bva/version.hpp"
#include "bva/walker.hpp"
