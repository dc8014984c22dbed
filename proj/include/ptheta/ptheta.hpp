// Copyright (c) 2026 the ptheta authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.

#ifndef PTHETA_PTHETA_HPP
#define PTHETA_PTHETA_HPP

#include "ptheta/audit.hpp"
#include "ptheta/bench.hpp"
#include "ptheta/big_complex.hpp"
#include "ptheta/big_float.hpp"
#include "ptheta/boundary.hpp"
#include "ptheta/certify.hpp"
#include "ptheta/complex_rect.hpp"
#include "ptheta/errors.hpp"
#include "ptheta/parallel.hpp"
#include "ptheta/point_eval.hpp"
#include "ptheta/precision.hpp"
#include "ptheta/product.hpp"
#include "ptheta/real_interval.hpp"
#include "ptheta/series.hpp"
#include "ptheta/zeros.hpp"

#endif
