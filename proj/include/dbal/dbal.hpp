// dbal.hpp - umbrella header.
#pragma once

#include "dbal/balance.hpp"
#include "dbal/bfs.hpp"
#include "dbal/errors.hpp"
#include "dbal/gp.hpp"
#include "dbal/graph.hpp"
#include "dbal/io.hpp"
#include "dbal/oracle.hpp"
#include "dbal/scan.hpp"
#include "dbal/vertex.hpp"
