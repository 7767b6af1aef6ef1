// elp.hpp — umbrella header.

#pragma once

#include "elp/asp.hpp"
#include "elp/core.hpp"
#include "elp/eht.hpp"
#include "elp/equilibrium.hpp"
#include "elp/json_io.hpp"
#include "elp/parser.hpp"
#include "elp/printer.hpp"
#include "elp/properties.hpp"
#include "elp/reduct.hpp"
#include "elp/solver.hpp"
#include "elp/syntax.hpp"
