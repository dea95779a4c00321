#pragma once

#include "lazyarith/checkpoint.hpp"
#include "lazyarith/collatz.hpp"
#include "lazyarith/engine.hpp"
#include "lazyarith/errors.hpp"
#include "lazyarith/guard.hpp"
#include "lazyarith/integer.hpp"
#include "lazyarith/output_sink.hpp"
#include "lazyarith/precision.hpp"
#include "lazyarith/rational.hpp"
#include "lazyarith/squaring.hpp"
