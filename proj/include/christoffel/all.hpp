#pragma once

#include "christoffel/arithmetic.hpp"
#include "christoffel/beatty.hpp"
#include "christoffel/christoffel.hpp"
#include "christoffel/errors.hpp"
#include "christoffel/money.hpp"
#include "christoffel/oracle.hpp"
#include "christoffel/superimpose.hpp"
#include "christoffel/word.hpp"
