#ifndef INTDEL_INTDEL_HPP
#define INTDEL_INTDEL_HPP

#include "intdel/bitset.hpp"
#include "intdel/caterpillar.hpp"
#include "intdel/errors.hpp"
#include "intdel/graph.hpp"
#include "intdel/hole_cover.hpp"
#include "intdel/holes.hpp"
#include "intdel/modules.hpp"
#include "intdel/obstructions.hpp"
#include "intdel/pqtree.hpp"
#include "intdel/recognition.hpp"
#include "intdel/solver.hpp"
#include "intdel/testkit.hpp"

#endif
