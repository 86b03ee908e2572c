#pragma once

#include "finalg/algebra.hpp"
#include "finalg/catalog.hpp"
#include "finalg/checks.hpp"
#include "finalg/enumerate.hpp"
#include "finalg/equivalence.hpp"
#include "finalg/error.hpp"
#include "finalg/filters.hpp"
#include "finalg/hom.hpp"
#include "finalg/io.hpp"
#include "finalg/lattice.hpp"
#include "finalg/quotient.hpp"
#include "finalg/twist.hpp"
