#pragma once

#include "netent/closed_forms.hpp"
#include "netent/conductance.hpp"
#include "netent/errors.hpp"
#include "netent/graph.hpp"
#include "netent/io.hpp"
#include "netent/random_graphs.hpp"
#include "netent/reduction.hpp"
#include "netent/schur.hpp"
#include "netent/verify.hpp"
