#pragma once

#include "qbasis/atom_space.hpp"
#include "qbasis/errors.hpp"
#include "qbasis/fiber_solver.hpp"
#include "qbasis/field.hpp"
#include "qbasis/idempotent.hpp"
#include "qbasis/module.hpp"
#include "qbasis/oracle.hpp"
#include "qbasis/quasibasis.hpp"
#include "qbasis/rank_profile.hpp"
#include "qbasis/ring.hpp"
#include "qbasis/stratification.hpp"
