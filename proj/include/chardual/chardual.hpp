#pragma once

#include "chardual/arith/cyclotomic.hpp"
#include "chardual/arith/galois_field.hpp"
#include "chardual/arith/integers.hpp"
#include "chardual/arith/prime_field.hpp"
#include "chardual/arith/rational_solve.hpp"
#include "chardual/blocks.hpp"
#include "chardual/classfn.hpp"
#include "chardual/duality.hpp"
#include "chardual/group/commutators.hpp"
#include "chardual/group/conjugacy.hpp"
#include "chardual/group/group.hpp"
#include "chardual/group/spec_io.hpp"
#include "chardual/table/character_table.hpp"
#include "chardual/table/dixon.hpp"
#include "chardual/table/provider.hpp"
#include "chardual/table/table_io.hpp"
