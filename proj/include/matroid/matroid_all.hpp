#pragma once

#include "matroid/bergman.hpp"
#include "matroid/constructions.hpp"
#include "matroid/cryptomorphism.hpp"
#include "matroid/enumerate.hpp"
#include "matroid/invariants.hpp"
#include "matroid/io.hpp"
#include "matroid/isomorphism.hpp"
#include "matroid/operations.hpp"
#include "matroid/polytope.hpp"
#include "matroid/representability.hpp"
#include "matroid/structure.hpp"
#include "matroid/sweep.hpp"
