#pragma once

#include "graphon_cpd/cpd.hpp"
#include "graphon_cpd/error.hpp"
#include "graphon_cpd/estim.hpp"
#include "graphon_cpd/eval.hpp"
#include "graphon_cpd/genmodels.hpp"
#include "graphon_cpd/io.hpp"
#include "graphon_cpd/netcore.hpp"
#include "graphon_cpd/parallel.hpp"
#include "graphon_cpd/random.hpp"
