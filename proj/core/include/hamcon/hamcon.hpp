#pragma once

#include "hamcon/accept.hpp"
#include "hamcon/bipartite.hpp"
#include "hamcon/cert.hpp"
#include "hamcon/cyclic.hpp"
#include "hamcon/exact.hpp"
#include "hamcon/families.hpp"
#include "hamcon/gf.hpp"
#include "hamcon/io.hpp"
#include "hamcon/pattern.hpp"
#include "hamcon/placement.hpp"
#include "hamcon/search.hpp"
#include "hamcon/set_family.hpp"
#include "hamcon/simple_graph.hpp"
#include "hamcon/util.hpp"
