#pragma once

#include "govsym/chars.hpp"
#include "govsym/common.hpp"
#include "govsym/experiments.hpp"
#include "govsym/numtheory.hpp"
#include "govsym/parallel.hpp"
#include "govsym/quadform.hpp"
#include "govsym/quadint.hpp"
#include "govsym/record.hpp"
#include "govsym/represent.hpp"
#include "govsym/sieve.hpp"
#include "govsym/symbols.hpp"
#include "govsym/verify.hpp"
