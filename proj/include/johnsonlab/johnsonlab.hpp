#pragma once

#include "errors.hpp"
#include "coeff.hpp"
#include "freegroup.hpp"
#include "groupring.hpp"
#include "magnus.hpp"
#include "sampling.hpp"
#include "filtrations.hpp"
#include "symplectic.hpp"
#include "mapclass.hpp"
#include "johnson.hpp"
#include "lift.hpp"
