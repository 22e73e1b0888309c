#pragma once

#include "pfvs/analysis.hpp"
#include "pfvs/bounds.hpp"
#include "pfvs/collection.hpp"
#include "pfvs/cover.hpp"
#include "pfvs/cycles.hpp"
#include "pfvs/errors.hpp"
#include "pfvs/feedback.hpp"
#include "pfvs/generators.hpp"
#include "pfvs/graph_algos.hpp"
#include "pfvs/incidence.hpp"
#include "pfvs/lemmas.hpp"
#include "pfvs/nesting.hpp"
#include "pfvs/oracles.hpp"
#include "pfvs/packing.hpp"
#include "pfvs/pdg_io.hpp"
#include "pfvs/planar_digraph.hpp"
#include "pfvs/rational.hpp"
#include "pfvs/regions.hpp"
#include "pfvs/report.hpp"
#include "pfvs/simplex.hpp"
#include "pfvs/sweep.hpp"
#include "pfvs/tau_star.hpp"
#include "pfvs/uncross.hpp"
