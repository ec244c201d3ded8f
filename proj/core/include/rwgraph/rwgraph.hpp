#pragma once

#include "rwgraph/canonical.hpp"
#include "rwgraph/coxeter.hpp"
#include "rwgraph/errors.hpp"
#include "rwgraph/flat_set.hpp"
#include "rwgraph/formulas.hpp"
#include "rwgraph/rank2.hpp"
#include "rwgraph/wordgraph.hpp"
