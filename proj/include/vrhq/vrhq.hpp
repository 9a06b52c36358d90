#ifndef VRHQ_VRHQ_HPP
#define VRHQ_VRHQ_HPP

#include "vrhq/arith_bounds.hpp"
#include "vrhq/bitset.hpp"
#include "vrhq/complexes.hpp"
#include "vrhq/domination.hpp"
#include "vrhq/errors.hpp"
#include "vrhq/gf2.hpp"
#include "vrhq/graph.hpp"
#include "vrhq/homology.hpp"
#include "vrhq/hypercube.hpp"
#include "vrhq/smith.hpp"

#endif // VRHQ_VRHQ_HPP
