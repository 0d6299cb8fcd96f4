#pragma once

#include "csa/algebra.hpp"
#include "csa/bialgebra.hpp"
#include "csa/bimodule.hpp"
#include "csa/error.hpp"
#include "csa/io.hpp"
#include "csa/kernels.hpp"
#include "csa/lie.hpp"
#include "csa/linalg.hpp"
#include "csa/manin.hpp"
#include "csa/matched.hpp"
#include "csa/report.hpp"
#include "csa/scalar.hpp"
#include "csa/search.hpp"
#include "csa/tensor.hpp"
