/// Umbrella header.
#pragma once

#include "coinf/code.hpp"
#include "coinf/hypercube.hpp"
#include "coinf/indicator.hpp"
#include "coinf/influence.hpp"
#include "coinf/io.hpp"
#include "coinf/matrix.hpp"
#include "coinf/polynomial.hpp"
#include "coinf/recovery.hpp"
#include "coinf/structure.hpp"
#include "coinf/word.hpp"
