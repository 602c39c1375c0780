#pragma once

#include "cdgraph/chordal.hpp"
#include "cdgraph/domishold.hpp"
#include "cdgraph/errors.hpp"
#include "cdgraph/families.hpp"
#include "cdgraph/graph.hpp"
#include "cdgraph/hereditary.hpp"
#include "cdgraph/hypergraph.hpp"
#include "cdgraph/induced.hpp"
#include "cdgraph/io.hpp"
#include "cdgraph/rational.hpp"
#include "cdgraph/separators.hpp"
#include "cdgraph/simplex.hpp"
#include "cdgraph/summability.hpp"
#include "cdgraph/threshold.hpp"
#include "cdgraph/vertex_set.hpp"
