#pragma once

#include "tempoflow/capacity.hpp"
#include "tempoflow/critical.hpp"
#include "tempoflow/cut_function.hpp"
#include "tempoflow/cuts.hpp"
#include "tempoflow/error.hpp"
#include "tempoflow/expand.hpp"
#include "tempoflow/maxflow.hpp"
#include "tempoflow/network.hpp"
#include "tempoflow/network_json.hpp"
#include "tempoflow/oracle.hpp"
#include "tempoflow/piecewise.hpp"
#include "tempoflow/verify.hpp"
