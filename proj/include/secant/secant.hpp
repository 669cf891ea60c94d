#pragma once

#include "secant/rational.hpp"
#include "secant/theta_poly.hpp"
#include "secant/ambient_class.hpp"
#include "secant/chern_series.hpp"
#include "secant/binomial.hpp"
#include "secant/upstream_class.hpp"
#include "secant/grr.hpp"
#include "secant/porteous.hpp"
#include "secant/degree.hpp"
#include "secant/verify.hpp"
