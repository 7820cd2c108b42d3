#pragma once

#include "pancyc/error.hpp"
#include "pancyc/graph.hpp"
#include "pancyc/surgery.hpp"
#include "pancyc/arc_system.hpp"
#include "pancyc/flow.hpp"
#include "pancyc/expansion.hpp"
#include "pancyc/witness.hpp"
#include "pancyc/constants.hpp"
#include "pancyc/engine.hpp"
#include "pancyc/oracles.hpp"
#include "pancyc/generators.hpp"
#include "pancyc/io.hpp"
