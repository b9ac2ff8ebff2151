#pragma once

#include "scx/bounds.hpp"
#include "scx/coboundary.hpp"
#include "scx/complex.hpp"
#include "scx/eigen_sym.hpp"
#include "scx/errors.hpp"
#include "scx/exact_rank.hpp"
#include "scx/experiment.hpp"
#include "scx/extension.hpp"
#include "scx/graph.hpp"
#include "scx/identities.hpp"
#include "scx/io.hpp"
#include "scx/laplacian.hpp"
#include "scx/random.hpp"
#include "scx/report.hpp"
#include "scx/simplex.hpp"
