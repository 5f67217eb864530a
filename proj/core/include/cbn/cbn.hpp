#pragma once

#include "cbn/control.hpp"
#include "cbn/digraph.hpp"
#include "cbn/dynamics.hpp"
#include "cbn/errors.hpp"
#include "cbn/generators.hpp"
#include "cbn/graph_analysis.hpp"
#include "cbn/necklace.hpp"
#include "cbn/oracle.hpp"
#include "cbn/orbits.hpp"
#include "cbn/state.hpp"
