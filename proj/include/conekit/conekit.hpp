#pragma once

#include "conekit/cone.hpp"
#include "conekit/coxeter.hpp"
#include "conekit/diamond.hpp"
#include "conekit/finite_building.hpp"
#include "conekit/flags.hpp"
#include "conekit/hahn.hpp"
#include "conekit/io.hpp"
#include "conekit/linalg.hpp"
#include "conekit/matrix.hpp"
#include "conekit/rational.hpp"
