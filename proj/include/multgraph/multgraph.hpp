#pragma once

#include "errors.hpp"
#include "partition.hpp"
#include "root_system.hpp"
#include "characters.hpp"
#include "tensor.hpp"
#include "tableaux.hpp"
#include "graph.hpp"
#include "theta.hpp"
#include "kernel.hpp"
#include "sweep.hpp"
#include "sampling.hpp"
#include "format.hpp"
#include "graph_io.hpp"
