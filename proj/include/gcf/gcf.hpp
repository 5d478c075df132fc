#pragma once

#include "gcf/error.hpp"
#include "gcf/gauss_dynamics.hpp"
#include "gcf/integer.hpp"
#include "gcf/lagrange.hpp"
#include "gcf/mat2.hpp"
#include "gcf/parse.hpp"
#include "gcf/partition.hpp"
#include "gcf/quad_surd.hpp"
#include "gcf/rational.hpp"
#include "gcf/real_value.hpp"
