#pragma once

#include "tropf5/errors.hpp"
#include "tropf5/coeff.hpp"
#include "tropf5/poly.hpp"
#include "tropf5/signature.hpp"
#include "tropf5/linalg.hpp"
#include "tropf5/f5.hpp"
#include "tropf5/oracle.hpp"
#include "tropf5/system.hpp"
#include "tropf5/run.hpp"
#include "tropf5/benchmarks.hpp"
